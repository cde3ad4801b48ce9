#include "qcert/certificate.hpp"
#include "qcert/facts.hpp"
#include "qcert/modsym.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace qcert;

int main(int argc, char** argv) {
  CLI::App app{"Certify that a plane quartic has maximal adelic image"};
  app.require_subcommand(0, 1);

  std::string config_path, report_path, format = "text";
  app.add_option("--config", config_path, "pipeline configuration (JSON)");
  app.add_option("--report", report_path, "write the JSON certificate here");
  app.add_option("--format", format, "stdout format")->check(CLI::IsMember({"json", "text"}));

  auto* lp = app.add_subcommand("lpoly", "print the L-polynomial at a good prime");
  std::string curve_path = "data/quartic_6391.json";
  std::uint64_t p = 0;
  lp->add_option("--curve", curve_path, "curve JSON")->capture_default_str();
  lp->add_option("--p", p, "prime")->required();

  auto* hk = app.add_subcommand("hecke", "compute Hecke characteristic polynomials on S_2(Gamma_0(N))^+");
  std::uint64_t level = 0;
  std::vector<std::uint64_t> primes{2, 5};
  std::string out;
  hk->add_option("--level", level, "level N")->required();
  hk->add_option("--primes", primes, "primes p not dividing N")->delimiter(',');
  hk->add_option("--out", out, "output JSON")->required();

  auto* fc = app.add_subcommand("facts", "list the trusted-facts registry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (lp->parsed()) {
      const auto L = l_polynomial(load_curve(curve_path), p);
      std::cout << "p = " << p << ": P(T) = " << to_string(L.poly(), 'T') << "\n";
      return 0;
    }
    if (hk->parsed()) {
      const ManinPresentation pres(level);
      std::vector<HeckeCharPoly> ops;
      for (auto q : primes) {
        if (level % q == 0) throw std::invalid_argument("p = " + std::to_string(q) + " divides the level");
        ops.push_back(hecke_charpoly(pres, q));
        std::cerr << "T_" << q << " done\n";
      }
      store_hecke_charpolys(out, ops);
      return 0;
    }
    if (fc->parsed()) {
      std::cout << "trusted facts, version " << kFactsVersion << "\n";
      for (const auto& f : trusted_facts()) std::cout << f.id << ": " << f.statement << " [" << f.reference << "]\n";
      return 0;
    }
    if (config_path.empty()) {
      std::cerr << "--config is required\n" << app.help();
      return 2;
    }
    const Certificate cert = run_pipeline(load_config(config_path));
    if (!report_path.empty()) {
      std::ofstream o(report_path);
      if (!o) throw std::runtime_error("cannot write " + report_path);
      o << render_report(cert, "json");
    }
    std::cout << render_report(cert, format);
    return cert.certified() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
