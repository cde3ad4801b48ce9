#include "qcert/hecke_data.hpp"

#include <json.hpp>

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcert {

namespace {

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace

std::uint64_t genus_x0(std::uint64_t N) {
  if (N == 0) throw std::invalid_argument("level must be positive");
  std::vector<std::uint64_t> ps;
  std::uint64_t m = N;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    ps.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) ps.push_back(m);

  std::uint64_t mu = N;
  for (auto p : ps) mu = mu / p * (p + 1);
  // Counts of elliptic points of order 2 and 3.
  std::int64_t nu2 = N % 4 == 0 ? 0 : 1, nu3 = N % 9 == 0 ? 0 : 1;
  for (auto p : ps) {
    const int chi4 = p == 2 ? 0 : (p % 4 == 1 ? 1 : -1);
    const int chi3 = p == 3 ? 0 : (p % 3 == 1 ? 1 : -1);
    nu2 *= 1 + chi4;
    nu3 *= 1 + chi3;
  }
  std::uint64_t cusps = 0;
  for (std::uint64_t d = 1; d <= N; ++d) {
    if (N % d == 0) cusps += euler_phi(std::gcd(d, N / d));
  }
  // 12 g = 12 + mu - 3 nu2 - 4 nu3 - 6 cusps
  const std::int64_t twelve_g = 12 + static_cast<std::int64_t>(mu) - 3 * nu2 - 4 * nu3 - 6 * static_cast<std::int64_t>(cusps);
  if (twelve_g < 0 || twelve_g % 12 != 0) throw std::logic_error("genus formula gave a non-integer");
  return static_cast<std::uint64_t>(twelve_g / 12);
}

std::string hecke_json(const std::vector<HeckeCharPoly>& ops) {
  nlohmann::ordered_json j;
  j["level"] = ops.empty() ? 0 : ops.front().level;
  j["weight"] = 2;
  j["operators"] = nlohmann::ordered_json::array();
  for (const auto& H : ops) {
    if (H.level != ops.front().level) throw std::invalid_argument("operators at different levels");
    nlohmann::ordered_json o;
    o["p"] = H.p;
    auto arr = nlohmann::ordered_json::array();
    for (const Int& c : H.charpoly.coeffs()) arr.push_back(to_string(c));
    o["charpoly"] = std::move(arr);
    j["operators"].push_back(std::move(o));
  }
  return j.dump(1) + "\n";
}

std::vector<HeckeCharPoly> parse_hecke_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("Hecke file is not valid JSON: ") + e.what());
  }
  try {
    const auto level = j.at("level").get<std::uint64_t>();
    if (j.at("weight").get<int>() != 2) throw std::invalid_argument("only weight 2 is supported");
    const std::uint64_t g = genus_x0(level);
    std::vector<HeckeCharPoly> out;
    for (const auto& o : j.at("operators")) {
      HeckeCharPoly H;
      H.level = level;
      H.p = o.at("p").get<std::uint64_t>();
      std::vector<Int> c;
      for (const auto& s : o.at("charpoly")) c.push_back(parse_int(s.get<std::string>()));
      H.charpoly = IntPoly(std::move(c));
      if (H.charpoly.degree() != static_cast<int>(g)) {
        throw std::invalid_argument("T_" + std::to_string(H.p) + " has degree " + std::to_string(H.charpoly.degree()) +
                                    ", expected the genus " + std::to_string(g));
      }
      if (H.charpoly.lead() != 1) throw std::invalid_argument("T_" + std::to_string(H.p) + " is not monic");
      out.push_back(std::move(H));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed Hecke file: ") + e.what());
  }
}

std::vector<HeckeCharPoly> load_hecke_charpolys(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_hecke_json(ss.str());
}

void store_hecke_charpolys(const std::string& path, const std::vector<HeckeCharPoly>& ops) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << hecke_json(ops);
}

}  // namespace qcert
