#include "knotarc/laurent.hpp"

#include <json.hpp>

#include <limits>
#include <sstream>
#include <stdexcept>

namespace knotarc {

namespace {

template <typename Map>
void drop_zeros(Map& terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second == 0) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
}

void require_nonzero(const Laurent2& x, const char* what) {
  if (x.is_zero()) {
    throw std::domain_error(std::string(what) + " of the zero polynomial");
  }
}

nlohmann::json coeff_json(const BigInt& c) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (c >= lo && c <= hi) {
    return static_cast<long long>(c);
  }
  return c.str();
}

BigInt coeff_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    return BigInt(j.get<long long>());
  }
  if (j.is_string()) {
    return BigInt(j.get<std::string>());
  }
  throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

void append_term(std::ostringstream& out, bool first, const BigInt& c, const std::string& body) {
  if (first) {
    out << c << '*' << body;
    return;
  }
  if (c < 0) {
    out << " - " << BigInt(-c) << '*' << body;
  } else {
    out << " + " << c << '*' << body;
  }
}

}  // namespace

Laurent2::Laurent2(Terms terms) : terms_(std::move(terms)) { drop_zeros(terms_); }

Laurent2 Laurent2::monomial(const BigInt& c, int i, int j) {
  Terms t;
  if (c != 0) {
    t.emplace(Key{i, j}, c);
  }
  return Laurent2(std::move(t));
}

Laurent2 Laurent2::delta() {
  return Laurent2(Terms{{{1, -1}, 1}, {{0, 0}, -1}, {{-1, -1}, 1}});
}

BigInt Laurent2::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int Laurent2::max_a() const {
  require_nonzero(*this, "max_a");
  return terms_.rbegin()->first.first;
}

int Laurent2::min_a() const {
  require_nonzero(*this, "min_a");
  return terms_.begin()->first.first;
}

int Laurent2::max_z() const {
  require_nonzero(*this, "max_z");
  int best = std::numeric_limits<int>::min();
  for (const auto& [k, c] : terms_) best = std::max(best, k.second);
  return best;
}

int Laurent2::min_z() const {
  require_nonzero(*this, "min_z");
  int best = std::numeric_limits<int>::max();
  for (const auto& [k, c] : terms_) best = std::min(best, k.second);
  return best;
}

Laurent2 Laurent2::operator-() const {
  Laurent2 r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

Laurent2& Laurent2::operator+=(const Laurent2& other) {
  for (const auto& [k, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Laurent2& Laurent2::operator-=(const Laurent2& other) { return *this += -other; }

Laurent1::Laurent1(Terms terms) : terms_(std::move(terms)) { drop_zeros(terms_); }

Laurent1 Laurent1::monomial(const BigInt& c, int e) {
  Terms t;
  if (c != 0) t.emplace(e, c);
  return Laurent1(std::move(t));
}

BigInt Laurent1::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int Laurent1::max_deg() const {
  if (terms_.empty()) throw std::domain_error("max_deg of the zero polynomial");
  return terms_.rbegin()->first;
}

int Laurent1::min_deg() const {
  if (terms_.empty()) throw std::domain_error("min_deg of the zero polynomial");
  return terms_.begin()->first;
}

bool Laurent1::is_unit_monomial() const {
  return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

Laurent1 Laurent1::operator-() const {
  Laurent1 r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Laurent1& Laurent1::operator+=(const Laurent1& other) {
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Laurent1 Laurent1::invert_variable() const {
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(-e, c);
  return Laurent1(std::move(t));
}

Laurent2 add(const Laurent2& x, const Laurent2& y) {
  Laurent2 r = x;
  r += y;
  return r;
}

Laurent2 neg(const Laurent2& x) { return -x; }

Laurent2 mul(const Laurent2& x, const Laurent2& y) {
  Laurent2::Terms acc;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      acc[{kx.first + ky.first, kx.second + ky.second}] += cx * cy;
    }
  }
  return Laurent2(std::move(acc));
}

Laurent2 mono_mul(const Laurent2& x, const BigInt& c, int i, int j) {
  if (c == 0) throw std::invalid_argument("mono_mul: coefficient must be nonzero");
  Laurent2::Terms t;
  for (const auto& [k, v] : x.terms()) t.emplace_hint(t.end(), Laurent2::Key{k.first + i, k.second + j}, v * c);
  return Laurent2(std::move(t));
}

int spread_a(const Laurent2& x) {
  require_nonzero(x, "spread_a");
  return x.max_a() - x.min_a();
}

PolySummary summarize(const Laurent2& x) {
  require_nonzero(x, "summarize");
  PolySummary s;
  const auto& terms = x.terms();
  // Within one a-degree the map is ordered by z, so the last entry of the top
  // stratum and the last entry of the bottom stratum carry the highest z-power.
  const auto& top = *terms.rbegin();
  s.max_a = top.first.first;
  s.top_zpow = top.first.second;
  s.top_coeff = top.second;

  s.min_a = terms.begin()->first.first;
  auto it = terms.lower_bound({s.min_a + 1, std::numeric_limits<int>::min()});
  --it;
  s.bot_zpow = it->first.second;
  s.bot_coeff = it->second;
  return s;
}

Laurent1 add(const Laurent1& x, const Laurent1& y) {
  Laurent1 r = x;
  r += y;
  return r;
}

Laurent1 mul(const Laurent1& x, const Laurent1& y) {
  Laurent1::Terms acc;
  for (const auto& [ex, cx] : x.terms()) {
    for (const auto& [ey, cy] : y.terms()) acc[ex + ey] += cx * cy;
  }
  return Laurent1(std::move(acc));
}

Laurent1 pow(const Laurent1& x, int n) {
  if (n < 0) {
    if (!x.is_unit_monomial()) throw std::domain_error("negative power of a non-unit");
    const auto& [e, c] = *x.terms().begin();
    return Laurent1::monomial((n % 2 != 0) ? c : BigInt(1), e * n);
  }
  Laurent1 result = Laurent1::one();
  Laurent1 base = x;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

Laurent1 substitute(const Laurent2& x, const Laurent1& a_image, const Laurent1& z_image) {
  if (!x.is_zero()) {
    if (x.min_z() < 0 && !z_image.is_unit_monomial()) {
      throw std::domain_error("negative z-power with non-unit image");
    }
    if (x.min_a() < 0 && !a_image.is_unit_monomial()) {
      throw std::domain_error("negative a-power with non-unit image");
    }
  }
  std::map<int, Laurent1> a_pows;
  std::map<int, Laurent1> z_pows;
  auto cached = [](std::map<int, Laurent1>& cache, const Laurent1& base, int n) -> const Laurent1& {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, pow(base, n)).first;
    return it->second;
  };
  Laurent1 result;
  for (const auto& [k, c] : x.terms()) {
    Laurent1 term = mul(cached(a_pows, a_image, k.first), cached(z_pows, z_image, k.second));
    result += mul(term, Laurent1::monomial(c, 0));
  }
  return result;
}

Laurent2 invert_a(const Laurent2& x) {
  Laurent2::Terms t;
  for (const auto& [k, c] : x.terms()) t.emplace(Laurent2::Key{-k.first, k.second}, c);
  return Laurent2(std::move(t));
}

std::string to_text(const Laurent2& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    std::ostringstream body;
    body << "a^" << it->first.first << "*z^" << it->first.second;
    append_term(out, first, it->second, body.str());
    first = false;
  }
  return out.str();
}

std::string to_text(const Laurent1& x, const std::string& var) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    append_term(out, first, it->second, var + "^" + std::to_string(it->first));
    first = false;
  }
  return out.str();
}

std::string to_json(const Laurent2& x) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : x.terms()) arr.push_back({k.first, k.second, coeff_json(c)});
  return arr.dump();
}

std::string to_json(const Laurent1& x) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : x.terms()) arr.push_back({e, coeff_json(c)});
  return arr.dump();
}

Laurent2 laurent2_from_json(const std::string& text) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
  }
  if (!arr.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  Laurent2::Terms t;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() || !item[1].is_number_integer()) {
      throw std::invalid_argument("polynomial term must be [i, j, c]");
    }
    t[{item[0].get<int>(), item[1].get<int>()}] += coeff_from_json(item[2]);
  }
  return Laurent2(std::move(t));
}

std::string to_text(const PolySummary& s) {
  std::ostringstream out;
  out << "[<" << s.top_coeff << "*z^" << s.top_zpow << ">a^" << s.max_a << ", <" << s.bot_coeff << "*z^"
      << s.bot_zpow << ">a^" << s.min_a << "]";
  return out.str();
}

}  // namespace knotarc
