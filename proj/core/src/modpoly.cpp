// Copyright 2026 The isofiber Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isofiber/modpoly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

#include "isofiber/errors.hpp"
#include "isofiber/factor.hpp"
#include "isofiber/heights.hpp"

namespace isofiber {

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(r & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(r >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t residue(const BigInt& z) {
  std::uint64_t r = mod_u64(abs(z), kPrime);
  return (sgn(z) < 0 && r != 0) ? kPrime - r : r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

bool parse_bigint(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

std::string level_ranges(const std::vector<int>& levels) {
  std::ostringstream os;
  for (std::size_t i = 0; i < levels.size();) {
    std::size_t j = i;
    while (j + 1 < levels.size() && levels[j + 1] == levels[j] + 1) ++j;
    if (i) os << ", ";
    os << levels[i];
    if (j > i) os << "-" << levels[j];
    i = j + 1;
  }
  return levels.empty() ? std::string("none") : os.str();
}

}  // namespace

std::uint64_t psi(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::kInvalidInput, "psi requires n >= 1");
  std::uint64_t result = n;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result = result / p * (p + 1);
  }
  if (m > 1) result = result / m * (m + 1);
  return result;
}

ModularPolynomial phi_one() {
  ModularPolynomial phi;
  phi.level = 1;
  phi.terms[{1, 0}] = 1;
  phi.antisymmetric = true;
  return phi;
}

ModularPolynomial parse_modpoly_file(std::string_view text, int declared_level) {
  if (declared_level < 1) throw Error(ErrorKind::kParse, "declared level must be positive");
  const int expected = static_cast<int>(psi(static_cast<std::uint64_t>(declared_level)));
  ModularPolynomial phi;
  phi.level = declared_level;

  int line_no = 0;
  int last_valid = 0;
  int top_degree = -1;
  int top_line = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": " + what +
                                       " (last valid line " + std::to_string(last_valid) + ")");
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() != '[') fail("expected '[i,k] c'");
    std::size_t close = line.find(']');
    if (close == std::string_view::npos) fail("missing ']'");
    std::string_view inner = line.substr(1, close - 1);
    std::size_t comma = inner.find(',');
    int i = 0, k = 0;
    if (comma == std::string_view::npos || !parse_int(inner.substr(0, comma), i) ||
        !parse_int(inner.substr(comma + 1), k))
      fail("malformed exponent pair");
    if (k < 0 || i < k) fail("exponents must satisfy i >= k >= 0");
    std::string_view rest = line.substr(close + 1);
    if (rest.empty() || !std::isspace(static_cast<unsigned char>(rest.front()))) fail("missing coefficient");
    BigInt c;
    if (!parse_bigint(trim(rest), c)) fail("malformed coefficient");
    if (phi.terms.count({i, k})) fail("duplicate monomial [" + std::to_string(i) + "," + std::to_string(k) + "]");
    if (i > expected) fail("degree " + std::to_string(i) + " exceeds psi(" + std::to_string(declared_level) +
                           ") = " + std::to_string(expected) + " for declared level");
    if (c != 0) {
      phi.terms.emplace(std::make_pair(i, k), std::move(c));
      if (i > top_degree) {
        top_degree = i;
        top_line = line_no;
      }
    }
    last_valid = line_no;
  }

  if (top_degree >= 0 && top_degree < expected && !phi.terms.count({expected, 0})) {
    throw Error(ErrorKind::kParse, "truncated or wrong level: no monomial of degree " + std::to_string(expected) +
                                       " = psi(" + std::to_string(declared_level) + "); top degree " +
                                       std::to_string(top_degree) + " at line " + std::to_string(top_line) +
                                       ", last valid line " + std::to_string(last_valid));
  }
  if (!phi.terms.count({expected, 0})) {
    throw Error(ErrorKind::kParse, "truncated: leading monomial [" + std::to_string(expected) +
                                       ",0] missing, last valid line " + std::to_string(last_valid));
  }
  ValidationReport report = validate(phi);
  if (!report.ok()) throw Error(ErrorKind::kParse, "validation failed: " + report.summary());
  return phi;
}

std::string format_modpoly(const ModularPolynomial& phi) {
  std::ostringstream os;
  for (auto it = phi.terms.rbegin(); it != phi.terms.rend(); ++it)
    os << '[' << it->first.first << ',' << it->first.second << "] " << to_string(it->second) << '\n';
  return os.str();
}

std::string ValidationReport::summary() const {
  if (violations.empty()) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.detail;
  }
  return out;
}

ValidationReport validate(const ModularPolynomial& phi) {
  ValidationReport report;
  if (phi.level < 1) {
    report.violations.push_back({ViolationKind::kDegreeX, "level must be positive"});
    return report;
  }
  const int expected = static_cast<int>(psi(static_cast<std::uint64_t>(phi.level)));
  int deg_x = -1, deg_y = -1;
  for (const auto& [ik, c] : phi.terms) {
    if (c == 0) continue;
    auto [i, k] = ik;
    if (i < 0 || k < 0) {
      report.violations.push_back({ViolationKind::kSymmetry, "negative exponent"});
      continue;
    }
    if (i < k) {
      report.violations.push_back({ViolationKind::kSymmetry, "stored term [" + std::to_string(i) + "," +
                                                                 std::to_string(k) + "] breaks i >= k"});
    }
    deg_x = std::max({deg_x, i, k});
    deg_y = std::max({deg_y, i, k});
  }
  if (phi.antisymmetric && phi.level != 1)
    report.violations.push_back({ViolationKind::kSymmetry, "only level 1 is antisymmetric"});
  if (deg_x != expected)
    report.violations.push_back({ViolationKind::kDegreeX, "deg_X = " + std::to_string(deg_x) + ", expected psi = " +
                                                              std::to_string(expected)});
  if (deg_y != expected)
    report.violations.push_back({ViolationKind::kDegreeY, "deg_Y = " + std::to_string(deg_y) + ", expected psi = " +
                                                              std::to_string(expected)});
  auto lead = phi.terms.find({expected, 0});
  if (lead == phi.terms.end() || lead->second != 1)
    report.violations.push_back({ViolationKind::kLeadingCoefficient, "coefficient of X^" +
                                                                         std::to_string(expected) + " is not 1"});
  return report;
}

CompiledModularPolynomial::CompiledModularPolynomial(ModularPolynomial phi) : phi_(std::move(phi)) {
  for (const auto& [ik, c] : phi_.terms) degree_ = std::max({degree_, ik.first, ik.second});
  const std::size_t w = static_cast<std::size_t>(degree_) + 1;
  dense_.assign(w * w, BigInt(0));
  for (const auto& [ik, c] : phi_.terms) {
    auto [i, k] = ik;
    dense_[i * w + k] += c;
    if (i != k) dense_[k * w + i] += phi_.antisymmetric ? BigInt(-c) : c;
  }
  dense_mod_.resize(dense_.size());
  for (std::size_t idx = 0; idx < dense_.size(); ++idx) dense_mod_[idx] = residue(dense_[idx]);
}

BigInt CompiledModularPolynomial::homogenized(const Rational& x, const Rational& y) const {
  const std::size_t w = static_cast<std::size_t>(degree_) + 1;
  auto powers = [&](const Rational& v) {
    std::vector<BigInt> num(w), den(w), out(w);
    num[0] = 1;
    den[0] = 1;
    for (std::size_t e = 1; e < w; ++e) {
      num[e] = num[e - 1] * v.get_num();
      den[e] = den[e - 1] * v.get_den();
    }
    for (std::size_t e = 0; e < w; ++e) out[e] = num[e] * den[w - 1 - e];
    return out;
  };
  std::vector<BigInt> xs = powers(x), ys = powers(y);
  BigInt total = 0, row;
  for (std::size_t i = 0; i < w; ++i) {
    row = 0;
    for (std::size_t k = 0; k < w; ++k) {
      const BigInt& c = dense_[i * w + k];
      if (c != 0) row += c * ys[k];
    }
    if (row != 0) total += row * xs[i];
  }
  return total;
}

Rational CompiledModularPolynomial::evaluate(const Rational& x, const Rational& y) const {
  BigInt scale = 1;
  BigInt dx, dy;
  mpz_pow_ui(dx.get_mpz_t(), x.get_den().get_mpz_t(), static_cast<unsigned long>(degree_));
  mpz_pow_ui(dy.get_mpz_t(), y.get_den().get_mpz_t(), static_cast<unsigned long>(degree_));
  scale = dx * dy;
  return make_rational(homogenized(x, y), scale);
}

bool CompiledModularPolynomial::vanishes(const Rational& x, const Rational& y) const {
  std::uint64_t dx = residue(x.get_den()), dy = residue(y.get_den());
  if (dx != 0 && dy != 0) {
    std::uint64_t xm = mulmod(residue(x.get_num()), powmod(dx, kPrime - 2));
    std::uint64_t ym = mulmod(residue(y.get_num()), powmod(dy, kPrime - 2));
    const std::size_t w = static_cast<std::size_t>(degree_) + 1;
    std::uint64_t total = 0;
    for (std::size_t i = w; i-- > 0;) {
      std::uint64_t row = 0;
      for (std::size_t k = w; k-- > 0;) row = addmod(mulmod(row, ym), dense_mod_[i * w + k]);
      total = addmod(mulmod(total, xm), row);
    }
    if (total != 0) return false;
  }
  return homogenized(x, y) == 0;
}

ZPoly CompiledModularPolynomial::specialize_y(const Rational& y) const {
  const std::size_t w = static_cast<std::size_t>(degree_) + 1;
  std::vector<BigInt> ys(w), num(w), den(w);
  num[0] = 1;
  den[0] = 1;
  for (std::size_t e = 1; e < w; ++e) {
    num[e] = num[e - 1] * y.get_num();
    den[e] = den[e - 1] * y.get_den();
  }
  for (std::size_t e = 0; e < w; ++e) ys[e] = num[e] * den[w - 1 - e];
  ZPoly out(w);
  for (std::size_t i = 0; i < w; ++i) {
    BigInt row = 0;
    for (std::size_t k = 0; k < w; ++k)
      if (dense_[i * w + k] != 0) row += dense_[i * w + k] * ys[k];
    out[i] = row;
  }
  return primitive_part(out);
}

Rational evaluate(const ModularPolynomial& phi, const Rational& x, const Rational& y) {
  return CompiledModularPolynomial(phi).evaluate(x, y);
}

ModularDatabase ModularDatabase::load(const std::filesystem::path& dir, int max_level) {
  if (max_level < 1) throw Error(ErrorKind::kConfig, "maximum isogeny degree must be >= 1");
  std::vector<int> missing;
  for (int n = 2; n <= max_level; ++n)
    if (!std::filesystem::exists(dir / ("phi_j_" + std::to_string(n) + ".txt"))) missing.push_back(n);
  if (!missing.empty()) {
    throw Error(ErrorKind::kMissingLevel, "modular polynomial level(s) " + level_ranges(missing) + " missing from " +
                                              dir.string() + "; available levels: " +
                                              level_ranges(available_levels(dir)));
  }
  std::vector<ModularPolynomial> polys;
  polys.push_back(phi_one());
  for (int n = 2; n <= max_level; ++n) {
    std::filesystem::path path = dir / ("phi_j_" + std::to_string(n) + ".txt");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::kMissingLevel, "cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      polys.push_back(parse_modpoly_file(buf.str(), n));
    } catch (const Error& e) {
      throw Error(ErrorKind::kParse, path.string() + ": " + e.what());
    }
  }
  return from_polynomials(std::move(polys));
}

ModularDatabase ModularDatabase::from_polynomials(std::vector<ModularPolynomial> polys) {
  ModularDatabase db;
  for (auto& p : polys) {
    int n = p.level;
    db.polys_[n] = std::make_shared<const CompiledModularPolynomial>(std::move(p));
  }
  return db;
}

std::vector<int> ModularDatabase::available_levels(const std::filesystem::path& dir) {
  std::vector<int> out{1};
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) return out;
  static const std::regex name(R"(phi_j_([0-9]+)\.txt)");
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    std::smatch m;
    std::string file = entry.path().filename().string();
    if (std::regex_match(file, m, name)) {
      int n = std::stoi(m[1].str());
      if (n > 1) out.push_back(n);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ModularDatabase::levels() const {
  std::vector<int> out;
  for (const auto& [n, p] : polys_) out.push_back(n);
  return out;
}

int ModularDatabase::max_contiguous_level() const {
  int n = 0;
  while (polys_.count(n + 1)) ++n;
  return n;
}

const CompiledModularPolynomial& ModularDatabase::at(int n) const {
  auto it = polys_.find(n);
  if (it == polys_.end()) {
    throw Error(ErrorKind::kMissingLevel, "modular polynomial level " + std::to_string(n) +
                                              " not loaded; available levels: " + level_ranges(levels()));
  }
  return *it->second;
}

bool is_cyclically_n_isogenous(const ModularDatabase& db, const Rational& j1, const Rational& j2, int n) {
  return db.at(n).vanishes(j1, j2);
}

std::optional<int> minimal_isogeny_degree(const ModularDatabase& db, const Rational& j1, const Rational& j2,
                                          int max_degree, int min_degree) {
  for (int n = std::max(1, min_degree); n <= max_degree; ++n) db.at(n);
  for (int n = std::max(1, min_degree); n <= max_degree; ++n)
    if (db.at(n).vanishes(j1, j2)) return n;
  return std::nullopt;
}

const std::array<CMEntry, 13>& cm_table() {
  static const std::array<CMEntry, 13> table{{
      {-3, 0},
      {-4, 1728},
      {-7, -3375},
      {-8, 8000},
      {-11, -32768},
      {-12, 54000},
      {-16, 287496},
      {-19, -884736},
      {-27, -12288000},
      {-28, 16581375},
      {-43, -884736000},
      {-67, -147197952000},
      {-163, -262537412640768000},
  }};
  return table;
}

std::optional<int> is_cm_j(const Rational& j) {
  if (j.get_den() != 1 || !j.get_num().fits_slong_p()) return std::nullopt;
  long v = j.get_num().get_si();
  for (const auto& e : cm_table())
    if (e.j == v) return e.discriminant;
  return std::nullopt;
}

ComplexRoots isogenous_j_multiset(const ModularDatabase& db, const Rational& j, int n, double tolerance) {
  return complex_roots(db.at(n).specialize_y(j), tolerance);
}

std::vector<IsogenousFactor> isogenous_factors(const ModularDatabase& db, const Rational& j, int n) {
  std::vector<IsogenousFactor> out;
  for (auto& f : factor(db.at(n).specialize_y(j))) {
    IsogenousFactor item;
    item.log_height = algebraic_height_from_minpoly(f.poly);
    item.minpoly = std::move(f.poly);
    item.multiplicity = f.multiplicity;
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<Rational> rational_isogenous_j(const ModularDatabase& db, const Rational& j, int n) {
  return rational_roots(db.at(n).specialize_y(j));
}

double pazuki_gap_bound(int n) {
  if (n < 1) throw Error(ErrorKind::kInvalidInput, "isogeny degree must be >= 1");
  return kPazukiLogA + 12.0 * std::log(static_cast<double>(n));
}

double pazuki_A() { return std::exp(kPazukiLogA); }

}  // namespace isofiber
