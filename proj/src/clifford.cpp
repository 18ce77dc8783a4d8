#include "spintime/clifford.hpp"

#include <bit>
#include <sstream>

#include "spintime/error.hpp"

namespace spintime {

// ---------------------------------------------------------------- Signature

Signature Signature::pq(int p, int q) {
  if (p < 0 || q < 0) throw ArgumentError("signature counts must be non-negative");
  std::vector<int> diag(static_cast<std::size_t>(p), 1);
  diag.insert(diag.end(), static_cast<std::size_t>(q), -1);
  return from_diag(std::move(diag));
}

Signature Signature::from_diag(std::vector<int> diag) {
  Signature s;
  for (int g : diag) {
    if (g == 1) ++s.p_;
    else if (g == -1) ++s.q_;
    else throw ArgumentError("signature entries must be +1 or -1");
  }
  s.diag_ = std::move(diag);
  return s;
}

int Signature::metric(int a) const {
  if (a < 1 || a > n()) throw ArgumentError("generator index " + std::to_string(a) + " out of range 1.." + std::to_string(n()));
  return diag_[static_cast<std::size_t>(a - 1)];
}

std::string Signature::to_string() const {
  std::ostringstream os;
  os << "Cliff(" << p_ << "," << q_ << ")[";
  for (std::size_t i = 0; i < diag_.size(); ++i) os << (i ? "," : "") << (diag_[i] > 0 ? "+" : "-");
  os << "]";
  return os.str();
}

// -------------------------------------------------------------------- Blade

Blade Blade::generator(int a) {
  if (a < 1 || a > kMaxGenerators) throw ArgumentError("generator index out of range");
  return {Mask{1} << (a - 1), 1};
}

int Blade::grade() const { return std::popcount(mask); }

int reorder_sign(Mask a, Mask b) {
  int swaps = 0;
  for (Mask x = a >> 1; x != 0; x >>= 1) swaps += std::popcount(x & b);
  return (swaps & 1) ? -1 : 1;
}

namespace {

int metric_sign(Mask common, const Signature& sig) {
  int sign = 1;
  for (Mask m = common; m != 0; m &= m - 1) sign *= sig.diag()[static_cast<std::size_t>(std::countr_zero(m))];
  return sign;
}

void check_mask(Mask m, const Signature& sig) {
  if (sig.n() < 32 && (m >> sig.n()) != 0)
    throw ArgumentError("blade uses a generator outside " + sig.to_string());
}

}  // namespace

Blade blade_product(const Blade& a, const Blade& b, const Signature& sig) {
  check_mask(a.mask, sig);
  check_mask(b.mask, sig);
  const int sign = a.sign * b.sign * reorder_sign(a.mask, b.mask) * metric_sign(a.mask & b.mask, sig);
  return {a.mask ^ b.mask, sign};
}

// ---------------------------------------------------------- CliffordElement

CliffordElement CliffordElement::scalar(const Rational& c) { return blade(0, c); }

CliffordElement CliffordElement::blade(Mask mask, const Rational& c) {
  CliffordElement x;
  x.add_term(mask, c);
  return x;
}

CliffordElement CliffordElement::from_blade(const Blade& b) { return blade(b.mask, Rational(b.sign)); }

Rational CliffordElement::coefficient(Mask mask) const {
  const auto it = terms_.find(mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CliffordElement::add_term(Mask mask, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<int> CliffordElement::grades() const {
  std::vector<int> out;
  for (const auto& [mask, c] : terms_) {
    const int g = std::popcount(mask);
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  for (const auto& [mask, c] : o.terms_) add_term(mask, c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  for (const auto& [mask, c] : o.terms_) add_term(mask, -c);
  return *this;
}

CliffordElement& CliffordElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, c] : terms_) c *= s;
  return *this;
}

std::string CliffordElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    if (mask == 0) {
      os << spintime::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) os << spintime::to_string(magnitude) << "*";
    os << "e[";
    bool first_index = true;
    for (Mask m = mask; m != 0; m &= m - 1) {
      os << (first_index ? "" : ",") << (std::countr_zero(m) + 1);
      first_index = false;
    }
    os << "]";
  }
  return os.str();
}

CliffordElement grade_project(const CliffordElement& x, int k) {
  CliffordElement out;
  for (const auto& [mask, c] : x.terms())
    if (std::popcount(mask) == k) out.add_term(mask, c);
  return out;
}

// ------------------------------------------------------------------ Algebra

Algebra::Algebra(Signature sig) : sig_(std::move(sig)) {
  if (sig_.n() > kMaxGenerators)
    throw ResourceError("Clifford algebra with " + std::to_string(sig_.n()) + " generators exceeds the cap of " +
                        std::to_string(kMaxGenerators));
}

Algebra make_algebra(const Signature& sig) { return Algebra(sig); }

void Algebra::check_index(int a) const {
  if (a < 1 || a > sig_.n())
    throw ArgumentError("generator index " + std::to_string(a) + " out of range for " + sig_.to_string());
}

CliffordElement Algebra::generator(int a) const {
  check_index(a);
  return CliffordElement::blade(Mask{1} << (a - 1));
}

CliffordElement Algebra::bivector(int a, int b, const Rational& c) const {
  check_index(a);
  check_index(b);
  if (a == b) throw ArgumentError("bivector needs two distinct indices");
  return c * multiply(generator(a), generator(b));
}

CliffordElement Algebra::word(const std::vector<int>& generators) const {
  Blade acc = Blade::unit();
  for (int a : generators) {
    check_index(a);
    acc = blade_product(acc, Blade::generator(a), sig_);
  }
  return CliffordElement::from_blade(acc);
}

int Algebra::product_sign(Mask a, Mask b) const { return blade_product({a, 1}, {b, 1}, sig_).sign; }

ProductTable Algebra::product_table() const {
  if (sig_.n() > 8) throw ResourceError("product tables are only materialized for <= 8 generators");
  ProductTable t;
  t.dimension = dimension();
  t.signs.resize(t.dimension * t.dimension);
  for (Mask a = 0; a < t.dimension; ++a)
    for (Mask b = 0; b < t.dimension; ++b)
      t.signs[static_cast<std::size_t>(a) * t.dimension + b] = static_cast<std::int8_t>(product_sign(a, b));
  return t;
}

CliffordElement Algebra::multiply(const CliffordElement& x, const CliffordElement& y) const {
  CliffordElement out;
  for (const auto& [ma, ca] : x.terms())
    for (const auto& [mb, cb] : y.terms()) {
      const Blade p = blade_product({ma, 1}, {mb, 1}, sig_);
      out.add_term(p.mask, p.sign > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
    }
  return out;
}

CliffordElement Algebra::commutator(const CliffordElement& x, const CliffordElement& y) const {
  return multiply(x, y) - multiply(y, x);
}

CliffordElement Algebra::anticommutator(const CliffordElement& x, const CliffordElement& y) const {
  return multiply(x, y) + multiply(y, x);
}

SparseMatrix<Rational> Algebra::left_multiplication(const CliffordElement& x) const {
  const std::size_t n = dimension();
  std::vector<Triplet<Rational>> t;
  for (Mask b = 0; b < n; ++b)
    for (const auto& [a, c] : x.terms()) {
      const Blade p = blade_product({a, 1}, {b, 1}, sig_);
      t.push_back({p.mask, b, p.sign > 0 ? c : Rational(-c)});
    }
  return SparseMatrix<Rational>::from_triplets(n, n, std::move(t));
}

SparseMatrix<Rational> Algebra::right_multiplication(const CliffordElement& x) const {
  const std::size_t n = dimension();
  std::vector<Triplet<Rational>> t;
  for (Mask b = 0; b < n; ++b)
    for (const auto& [a, c] : x.terms()) {
      const Blade p = blade_product({b, 1}, {a, 1}, sig_);
      t.push_back({p.mask, b, p.sign > 0 ? c : Rational(-c)});
    }
  return SparseMatrix<Rational>::from_triplets(n, n, std::move(t));
}

// --------------------------------------------------------- representations

namespace {

using Op = SparseMatrix<Rational>;

Op small(std::size_t n, std::initializer_list<int> entries) {
  std::vector<Triplet<Rational>> t;
  std::size_t k = 0;
  for (int v : entries) {
    if (v != 0) t.push_back({k / n, k % n, Rational(v)});
    ++k;
  }
  return Op::from_triplets(n, n, std::move(t));
}

const Op& sigma1() {
  static const Op m = small(2, {0, 1, 1, 0});
  return m;
}
const Op& sigma3() {
  static const Op m = small(2, {1, 0, 0, -1});
  return m;
}
// Real 2x2 complex structure, squares to -1.
const Op& epsilon() {
  static const Op m = small(2, {0, 1, -1, 0});
  return m;
}

struct Built {
  std::size_t dim = 1;
  std::vector<Op> positives;
  std::vector<Op> negatives;
};

// Generators for Cliff(p,q), positives and negatives kept apart.
Built build(int p, int q) {
  if (p == 0 && q == 0) return {};
  if (p >= 1 && q >= 1) {
    // Cliff(p,q) = Cliff(p-1,q-1) (x) M(2,R).
    const Built base = build(p - 1, q - 1);
    Built out;
    out.dim = base.dim * 2;
    const Op id = Op::identity(base.dim);
    for (const auto& g : base.positives) out.positives.push_back(kron(g, sigma3()));
    out.positives.push_back(kron(id, sigma1()));
    for (const auto& g : base.negatives) out.negatives.push_back(kron(g, sigma3()));
    out.negatives.push_back(kron(id, epsilon()));
    return out;
  }
  if (q == 0) {
    // Cliff(p,0) from Cliff(0,p-2): sigma1, sigma3 and epsilon (x) Gamma.
    const Built base = build(0, p - 2);
    Built out;
    out.dim = base.dim * 2;
    const Op id = Op::identity(base.dim);
    out.positives.push_back(kron(sigma1(), id));
    out.positives.push_back(kron(sigma3(), id));
    for (const auto& g : base.negatives) out.positives.push_back(kron(epsilon(), g));
    return out;
  }
  if (q == 2) {
    // Left multiplication by i and j on the quaternions, basis (1, i, j, k).
    Built out;
    out.dim = 4;
    out.negatives.push_back(small(4, {0, -1, 0, 0,  //
                                      1, 0, 0, 0,   //
                                      0, 0, 0, -1,  //
                                      0, 0, 1, 0}));
    out.negatives.push_back(small(4, {0, 0, -1, 0,  //
                                      0, 0, 0, 1,   //
                                      1, 0, 0, 0,   //
                                      0, -1, 0, 0}));
    return out;
  }
  // Cliff(0,q) from Cliff(4,q-4): f_i = e_i w with w = e_1 e_2 e_3 e_4.
  const Built base = build(4, q - 4);
  const Op w = base.positives[0] * base.positives[1] * base.positives[2] * base.positives[3];
  Built out;
  out.dim = base.dim;
  for (int i = 0; i < 4; ++i) out.negatives.push_back(base.positives[static_cast<std::size_t>(i)] * w);
  for (const auto& g : base.negatives) out.negatives.push_back(g);
  return out;
}

}  // namespace

SparseMatrix<Rational> GammaRep::bivector(int a, int b, const Rational& c) const {
  if (a == b) throw ArgumentError("bivector needs two distinct indices");
  return c * (gamma(a) * gamma(b));
}

SparseMatrix<Rational> GammaRep::blade(Mask mask) const {
  Op acc = identity();
  for (Mask m = mask; m != 0; m &= m - 1) acc = acc * gammas.at(static_cast<std::size_t>(std::countr_zero(m)));
  return acc;
}

std::size_t minimal_real_dimension(const Signature& sig) {
  const int n = sig.n();
  if (n % 2 != 0) throw UnsupportedError("minimal_real_dimension: odd generator count");
  const int type = (((sig.p() - sig.q()) % 8) + 8) % 8;
  const std::size_t half = std::size_t{1} << (n / 2);
  return (type == 0 || type == 2) ? half : 2 * half;
}

GammaRep matrix_rep(const Signature& sig) {
  if (sig.n() % 2 != 0 || sig.n() > 8)
    throw UnsupportedError("matrix_rep needs an even generator count <= 8, got " + sig.to_string());
  const Built built = build(sig.p(), sig.q());
  GammaRep rep;
  rep.signature = sig;
  rep.dim = built.dim;
  std::size_t next_pos = 0, next_neg = 0;
  for (int g : sig.diag()) rep.gammas.push_back(g > 0 ? built.positives[next_pos++] : built.negatives[next_neg++]);
  if (!satisfies_anticommutator(rep)) throw ConstructionError("gamma construction failed for " + sig.to_string());
  return rep;
}

bool satisfies_anticommutator(const GammaRep& rep) {
  const int n = rep.signature.n();
  const Op id = rep.identity();
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      const Op ac = anticommutator(rep.gamma(a), rep.gamma(b));
      const Rational expected = a == b ? Rational(2 * rep.signature.metric(a)) : Rational(0);
      if (!(ac == expected * id)) return false;
    }
  return true;
}

SparseMatrix<Rational> represent(const CliffordElement& x, const GammaRep& rep) {
  Op acc(rep.dim, rep.dim);
  for (const auto& [mask, c] : x.terms()) acc = acc + c * rep.blade(mask);
  return acc;
}

// ------------------------------------------------------------------- ranks

namespace {

std::string tower_text(int r) {
  if (r <= 4) {
    BigInt d = 1;
    for (int i = 0; i < r; ++i) d = BigInt(1) << static_cast<unsigned>(d.convert_to<unsigned long>());
    return d.str();
  }
  const std::string inner = tower_text(r - 1);
  return r - 1 >= 5 ? "2^(" + inner + ")" : "2^" + inner;
}

}  // namespace

RankDimension rank_dimensions(int r) {
  if (r < 0) throw ArgumentError("rank must be non-negative");
  RankDimension out;
  out.rank = r;
  if (r <= 4) {
    BigInt prev = 0, dim = 1;
    for (int i = 0; i < r; ++i) {
      prev = dim;
      dim = BigInt(1) << static_cast<unsigned>(dim.convert_to<unsigned long>());
    }
    out.dim = dim;
    out.delta = r == 0 ? BigInt(1) : BigInt(dim - prev);
    out.dim_text = dim.str();
    out.delta_text = out.delta->str();
    return out;
  }
  out.dim_text = tower_text(r);
  out.delta_text = tower_text(r) + " - " + tower_text(r - 1);
  return out;
}

}  // namespace spintime
