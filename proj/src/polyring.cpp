#include "hesscell/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace hesscell {

// ---------------------------------------------------------------- VariableId

std::string VariableId::name() const {
  std::string s = family == Family::PatchX ? "x_" : "z_";
  return s + std::to_string(row) + "_" + std::to_string(col);
}

VariableId VariableId::parse(std::string_view text) {
  auto fail = [&] { return InvalidInput("malformed variable name '" + std::string(text) + "'"); };
  if (text.size() < 5 || text[1] != '_') throw fail();
  VariableId v;
  if (text[0] == 'x')
    v.family = Family::PatchX;
  else if (text[0] == 'z')
    v.family = Family::CellZ;
  else
    throw fail();
  const char* p = text.data() + 2;
  const char* end = text.data() + text.size();
  auto r1 = std::from_chars(p, end, v.row);
  if (r1.ec != std::errc() || r1.ptr == end || *r1.ptr != '_') throw fail();
  auto r2 = std::from_chars(r1.ptr + 1, end, v.col);
  if (r2.ec != std::errc() || r2.ptr != end || v.row < 1 || v.col < 1) throw fail();
  return v;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(VariableId v, unsigned exponent) {
  if (exponent > 0) factors_.emplace_back(v, exponent);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(v, e);
  }
  return m;
}

unsigned Monomial::exponent(VariableId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const VariableId& x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != other.factors_.end() && it->first < v) ++it;
    if (it == other.factors_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      m.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      m.factors_.push_back(*b++);
    } else {
      m.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return m;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this))
    throw InvalidInput("monomial " + divisor.str() + " does not divide " + str());
  Monomial m;
  for (const auto& [v, e] : factors_) {
    const unsigned r = e - divisor.exponent(v);
    if (r > 0) m.factors_.emplace_back(v, r);
  }
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<Factor> all = factors_;
  for (const auto& [v, e] : other.factors_) {
    auto it = std::find_if(all.begin(), all.end(), [&](const Factor& f) { return f.first == v; });
    if (it == all.end())
      all.emplace_back(v, e);
    else
      it->second = std::max(it->second, e);
  }
  return from_factors(std::move(all));
}

Monomial Monomial::pow(unsigned e) const {
  Monomial m;
  if (e == 0) return m;
  m.factors_ = factors_;
  for (auto& f : m.factors_) f.second *= e;
  return m;
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

// ---------------------------------------------------------------- CoefficientDomain

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

CoefficientDomain CoefficientDomain::prime_field(unsigned long p) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  return CoefficientDomain(p);
}

void CoefficientDomain::normalize(mpz_class& c) const {
  if (modulus_ == 0) return;
  mpz_fdiv_r_ui(c.get_mpz_t(), c.get_mpz_t(), modulus_);
}

mpz_class CoefficientDomain::inverse(const mpz_class& c) const {
  if (modulus_ == 0) {
    if (c == 1 || c == -1) return c;
    throw DomainMismatch("coefficient " + c.get_str() + " is not a unit in Z");
  }
  mpz_class r = c;
  normalize(r);
  mpz_class p = modulus_;
  mpz_class inv;
  if (r == 0 || mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t()) == 0)
    throw DomainMismatch("coefficient " + c.get_str() + " is not invertible mod " +
                         std::to_string(modulus_));
  return inv;
}

std::string CoefficientDomain::str() const {
  return modulus_ == 0 ? "ZZ" : "GF(" + std::to_string(modulus_) + ")";
}

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(const mpz_class& c, CoefficientDomain domain) {
  Polynomial p(domain);
  p.add_term(Monomial(), c);
  return p;
}

Polynomial Polynomial::variable(VariableId v, CoefficientDomain domain) {
  return term(1, Monomial(v), domain);
}

Polynomial Polynomial::term(const mpz_class& c, const Monomial& m, CoefficientDomain domain) {
  Polynomial p(domain);
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

mpz_class Polynomial::constant_value() const { return coefficient(Monomial()); }

mpz_class Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::set<VariableId> Polynomial::variables() const {
  std::set<VariableId> out;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) out.insert(f.first);
  return out;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
  domain_.normalize(it->second);
  if (it->second == 0) terms_.erase(it);
}

void Polynomial::require_same_domain(const Polynomial& o) const {
  if (!(domain_ == o.domain_))
    throw DomainMismatch("coefficient domains differ: " + domain_.str() + " vs " +
                         o.domain_.str());
}

Polynomial Polynomial::operator-() const {
  Polynomial r(domain_);
  for (const auto& [m, c] : terms_) r.add_term(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_domain(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_domain(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_domain(o);
  Polynomial r(domain_);
  mpz_class prod;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      prod = ca * cb;
      r.add_term(ma * mb, prod);
    }
  return r;
}

Polynomial Polynomial::scaled(const mpz_class& c) const {
  Polynomial r(domain_);
  for (const auto& [m, a] : terms_) r.add_term(m, a * c);
  return r;
}

Polynomial Polynomial::mul_term(const mpz_class& c, const Monomial& mono) const {
  Polynomial r(domain_);
  for (const auto& [m, a] : terms_) r.add_term(m * mono, a * c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(1, domain_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::to_prime_field(unsigned long p) const {
  Polynomial r(CoefficientDomain::prime_field(p));
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::to_integers() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    mpz_class mag = negative ? mpz_class(-c) : c;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    if (m.is_one()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += m.str();
    }
  }
  return s;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, CoefficientDomain domain) : text_(text), domain_(domain) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Polynomial result = parse_sum();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + peek() + "'");
    return result;
  }

 private:
  // sum := ['+'|'-'] product (('+'|'-') product)*
  Polynomial parse_sum() {
    Polynomial result(domain_);
    skip_ws();
    bool negate = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negate = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Polynomial t = parse_product();
      result += negate ? -t : t;
      skip_ws();
      if (at_end() || (peek() != '+' && peek() != '-')) return result;
      negate = peek() == '-';
      ++pos_;
    }
  }

  Polynomial parse_product() {
    Polynomial result = parse_power();
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') return result;
      ++pos_;
      result = result * parse_power();
    }
  }

  Polynomial parse_power() {
    Polynomial base = parse_atom();
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      const std::string digits = read_digits();
      if (digits.size() > 6) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial parse_atom() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(peek())))
      return Polynomial::constant(mpz_class(read_digits()), domain_);
    if (peek() == '(') {
      ++pos_;
      Polynomial inner = parse_sum();
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (peek() == 'x' || peek() == 'z') {
      const std::size_t start = pos_;
      ++pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      return Polynomial::variable(VariableId::parse(text_.substr(start, pos_ - start)), domain_);
    }
    fail(std::string("unexpected character '") + peek() + "'");
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInput("cannot parse polynomial '" + std::string(text_) + "' at offset " +
                       std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  CoefficientDomain domain_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, CoefficientDomain domain) {
  if (text == "0") return Polynomial(domain);
  return PolyParser(text, domain).parse();
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
  }
  throw InvalidInput("unknown arithmetic operation");
}

Polynomial substitute(const Polynomial& p, const std::map<VariableId, Polynomial>& sigma,
                      const std::set<VariableId>& target_universe) {
  for (const auto& [v, image] : sigma) {
    if (!(image.domain() == p.domain()))
      throw DomainMismatch("substitution image for " + v.name() + " is over " +
                           image.domain().str());
    for (const auto& u : image.variables())
      if (!target_universe.count(u))
        throw DomainMismatch("image variable " + u.name() + " is not in the target universe");
  }
  // Powers of images are cached per (variable, exponent).
  std::map<std::pair<VariableId, unsigned>, Polynomial> powers;
  auto image_power = [&](VariableId v, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto s = sigma.find(v);
    Polynomial base;
    if (s != sigma.end()) {
      base = s->second;
    } else {
      if (!target_universe.count(v))
        throw DomainMismatch("variable " + v.name() + " has no image and is not in the target universe");
      base = Polynomial::variable(v, p.domain());
    }
    return powers.emplace(key, base.pow(e)).first->second;
  };

  Polynomial result(p.domain());
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(c, p.domain());
    for (const auto& [v, e] : m.factors()) {
      const Polynomial& img = image_power(v, e);
      if (img.is_zero()) {
        t = Polynomial(p.domain());
        break;
      }
      t = t * img;
    }
    result += t;
  }
  return result;
}

// ---------------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(int n, CoefficientDomain domain)
    : n_(n), domain_(domain), entries_(static_cast<std::size_t>(n) * n, Polynomial(domain)) {
  if (n < 0) throw InvalidInput("matrix size must be nonnegative");
}

std::size_t PolyMatrix::index(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw InvalidInput("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                       ") out of range for n=" + std::to_string(n_));
  return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

PolyMatrix PolyMatrix::identity(int n, CoefficientDomain domain) {
  PolyMatrix m(n, domain);
  for (int i = 1; i <= n; ++i) m(i, i) = Polynomial::constant(1, domain);
  return m;
}

PolyMatrix PolyMatrix::permutation(const Permutation& w) {
  PolyMatrix m(w.size());
  for (int j = 1; j <= w.size(); ++j) m(w(j), j) = Polynomial::constant(1);
  return m;
}

PolyMatrix PolyMatrix::nilpotent(int n) {
  PolyMatrix m(n);
  for (int i = 1; i < n; ++i) m(i, i + 1) = Polynomial::constant(1);
  return m;
}

PolyMatrix PolyMatrix::map(const std::function<Polynomial(const Polynomial&)>& f) const {
  PolyMatrix out(n_, domain_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = f(entries_[k]);
  if (!entries_.empty()) out.domain_ = out.entries_.front().domain();
  return out;
}

bool PolyMatrix::is_lower_unitriangular() const {
  const Polynomial one = Polynomial::constant(1, domain_);
  for (int i = 1; i <= n_; ++i)
    for (int j = i; j <= n_; ++j) {
      const Polynomial& e = (*this)(i, j);
      if (i == j ? !(e == one) : !e.is_zero()) return false;
    }
  return true;
}

std::set<VariableId> PolyMatrix::variables() const {
  std::set<VariableId> out;
  for (const auto& e : entries_) {
    auto v = e.variables();
    out.insert(v.begin(), v.end());
  }
  return out;
}

std::string PolyMatrix::str() const {
  std::ostringstream os;
  for (int i = 1; i <= n_; ++i) {
    os << "[";
    for (int j = 1; j <= n_; ++j) os << (j > 1 ? ", " : "") << (*this)(i, j).str();
    os << "]\n";
  }
  return os.str();
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size() != b.size())
    throw DomainMismatch("matrix sizes differ: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  if (!(a.domain() == b.domain())) throw DomainMismatch("matrix coefficient domains differ");
  const int n = a.size();
  PolyMatrix c(n, a.domain());
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      const Polynomial& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 1; j <= n; ++j) {
        const Polynomial& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j) += aik * bkj;
      }
    }
  return c;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) { return mat_mul(a, b); }

PolyMatrix unitriangular_inverse(const PolyMatrix& m) {
  if (!m.is_lower_unitriangular()) throw InvalidInput("matrix is not lower unitriangular");
  const int n = m.size();
  PolyMatrix x = PolyMatrix::identity(n, m.domain());
  // X_{ij} = -sum_{k=j}^{i-1} M_{ik} X_{kj} for i > j.
  for (int j = 1; j <= n; ++j)
    for (int i = j + 1; i <= n; ++i) {
      Polynomial acc(m.domain());
      for (int k = j; k < i; ++k) {
        if (m(i, k).is_zero() || x(k, j).is_zero()) continue;
        acc -= m(i, k) * x(k, j);
      }
      x(i, j) = std::move(acc);
    }
  return x;
}

PolyMatrix inverse_unitriangular_conjugate(const Permutation& w, const PolyMatrix& m) {
  if (w.size() != m.size()) throw DomainMismatch("permutation and matrix sizes differ");
  const PolyMatrix minv = unitriangular_inverse(m);
  // (M^{-1} P_{w^{-1}})_{i,j} = (M^{-1})_{i, w^{-1}(j)}.
  const Permutation winv = w.inverse();
  PolyMatrix out(m.size(), m.domain());
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j) out(i, j) = minv(i, winv(j));
  return out;
}

}  // namespace hesscell
