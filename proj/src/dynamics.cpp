#include "spintime/dynamics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cctype>
#include <cmath>
#include <sstream>

#include "spintime/error.hpp"
#include "spintime/quantify.hpp"

namespace spintime {

// ------------------------------------------------------------- Yang-Dirac

namespace {

// Ordered-pair lookup with J_ba = -J_ab and J_aa = 0.
template <class T, class Make>
std::vector<std::vector<T>> pair_table(int n, Make make) {
  std::vector<std::vector<T>> table(static_cast<std::size_t>(n + 1), std::vector<T>(static_cast<std::size_t>(n + 1)));
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      T j = make(a, b);
      table[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = -j;
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::move(j);
    }
  return table;
}

}  // namespace

YangDiracOperator yang_dirac_operator(int cells, const Signature& sig, bool half) {
  const GammaRep rep = cell_representation(sig);
  const Rational c = half ? Rational(1, 2) : Rational(1);
  const int n = sig.n();
  const auto J = pair_table<SparseMatrix<Rational>>(
      n, [&](int a, int b) { return QuantifiedOperator(rep.bivector(a, b, c), cells).materialize(); });
  YangDiracOperator out;
  out.cells = cells;
  out.half = half;
  const std::size_t dim = checked_power(rep.dim, cells);
  out.op = SparseMatrix<Rational>(dim, dim);
  for (int m2 = 1; m2 <= n; ++m2)
    for (int m1 = 1; m1 <= n; ++m1) {
      if (m1 == m2) continue;
      for (int m = 1; m <= n; ++m) {
        if (m == m1 || m == m2) continue;
        const int sign = sig.metric(m2) * sig.metric(m1) * sig.metric(m);
        const auto& a = J[static_cast<std::size_t>(m2)][static_cast<std::size_t>(m1)];
        const auto& b = J[static_cast<std::size_t>(m1)][static_cast<std::size_t>(m)];
        const auto& d = J[static_cast<std::size_t>(m)][static_cast<std::size_t>(m2)];
        out.op = out.op + Rational(sign) * (a * b * d);
      }
    }
  return out;
}

CliffordElement yang_dirac_element(const Signature& sig, bool half) {
  const Algebra alg(sig);
  const Rational c = half ? Rational(1, 2) : Rational(1);
  const int n = sig.n();
  const auto J = pair_table<CliffordElement>(n, [&](int a, int b) { return alg.bivector(a, b, c); });
  CliffordElement out;
  for (int m2 = 1; m2 <= n; ++m2)
    for (int m1 = 1; m1 <= n; ++m1) {
      if (m1 == m2) continue;
      for (int m = 1; m <= n; ++m) {
        if (m == m1 || m == m2) continue;
        const int sign = sig.metric(m2) * sig.metric(m1) * sig.metric(m);
        const auto prod = alg.multiply(alg.multiply(J[static_cast<std::size_t>(m2)][static_cast<std::size_t>(m1)],
                                                    J[static_cast<std::size_t>(m1)][static_cast<std::size_t>(m)]),
                                       J[static_cast<std::size_t>(m)][static_cast<std::size_t>(m2)]);
        out += Rational(sign) * prod;
      }
    }
  return out;
}

// --------------------------------------------------------------- dynamics

namespace {

void check_antisymmetric(const Eigen::MatrixXd& m, double tol, const std::string& what) {
  if (m.rows() != m.cols()) throw ArgumentError(what + " must be square");
  const double scale = std::max(1.0, m.norm());
  if ((m + m.transpose()).norm() > tol * scale) throw ContractError(what + " is not antisymmetric");
}

}  // namespace

DynamicsVector dynamics_from_exponent(const Eigen::MatrixXd& exponent) {
  check_antisymmetric(exponent, 1e-12, "exponent");
  DynamicsVector d;
  d.exponent = exponent;
  d.matrix = exponent.exp();
  const auto id = Eigen::MatrixXd::Identity(exponent.rows(), exponent.cols());
  d.orthogonality_error = (d.matrix.transpose() * d.matrix - id).norm();
  return d;
}

DynamicsVector dynamics_vector(const std::array<Eigen::MatrixXd, 3>& s_iso,
                               const std::array<Eigen::MatrixXd, 3>& ihat_iso, double tol) {
  const Eigen::Index n = s_iso[0].rows();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < 3; ++k) {
    if (s_iso[k].rows() != n || ihat_iso[k].rows() != n)
      throw ArgumentError("dynamics_vector: component dimensions differ");
    check_antisymmetric(s_iso[k], tol, "S component " + std::to_string(k + 1));
    check_antisymmetric(ihat_iso[k], tol, "ihat component " + std::to_string(k + 1));
    sum += ihat_iso[k] * s_iso[k];
  }
  const Eigen::MatrixXd skew = 0.5 * (sum - sum.transpose());
  DynamicsVector d = dynamics_from_exponent(skew);
  d.discarded_symmetric_norm = (0.5 * (sum + sum.transpose())).norm();
  return d;
}

Eigen::MatrixXd HistoryPort::product() const {
  if (factors.empty()) throw ArgumentError("history port has no factors");
  Eigen::MatrixXd p = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i].cols() != p.rows()) throw ArgumentError("history port factor dimensions differ");
    p = factors[i] * p;
  }
  return p;
}

GreenContraction green_contraction(const DynamicsVector& d, const HistoryPort& e, double tol) {
  const Eigen::MatrixXd ep = e.product();
  if (ep.rows() != d.matrix.cols() || ep.cols() != d.matrix.rows())
    throw ArgumentError("green_contraction: port and dynamics vector dimensions differ");
  GreenContraction g;
  g.unnormalized = (d.matrix * ep).trace();
  g.trace_d = d.matrix.trace();
  if (std::abs(g.trace_d) > tol * std::max(1.0, d.matrix.norm())) {
    g.value = g.unnormalized / g.trace_d;
    g.normalized = true;
    g.status = "ok";
  } else {
    g.value = std::nan("");
    g.status = "tr(D) vanishes; unnormalized trace returned";
  }
  return g;
}

// ------------------------------------------------------------ polynomials

std::string Polynomial::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    out += spintime::to_string(terms[i].coefficient);
    if (!terms[i].word.empty()) out += " *";
    for (int a : terms[i].word) out += " g(" + std::to_string(a) + ")";
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int generators) : generators_(generators) {
    // Drop comments, keep line structure irrelevant.
    bool comment = false;
    for (char ch : text) {
      if (ch == '#') comment = true;
      if (ch == '\n') comment = false;
      if (!comment) src_ += ch;
    }
  }

  Polynomial parse() {
    Polynomial p;
    skip();
    if (at_end()) throw ParseError("empty polynomial");
    Rational sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = get() == '-' ? -1 : 1;
      skip();
    }
    for (;;) {
      auto t = term();
      t.coefficient *= sign;
      if (t.coefficient != 0) p.terms.push_back(std::move(t));
      skip();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
      sign = op == '-' ? -1 : 1;
    }
    return p;
  }

 private:
  Polynomial::Term term() {
    Polynomial::Term t{Rational(1), {}};
    skip();
    bool any = false;
    if (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-' || peek() == '+')) {
      t.coefficient = number();
      any = true;
      skip();
      if (!at_end() && peek() == '*') {
        get();
        skip();
        if (at_end() || peek() != 'g') fail("expected a generator after '*'");
      }
    }
    while (!at_end() && peek() == 'g') {
      t.word.push_back(generator());
      if (t.word.size() > kMaxWordLength) throw ArgumentError("word longer than 10^4 generators");
      any = true;
      skip();
    }
    if (!any) fail("expected a coefficient or a generator");
    return t;
  }

  int generator() {
    get();  // 'g'
    skip();
    if (at_end() || get() != '(') fail("expected '(' after g");
    skip();
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    skip();
    if (digits.empty() || at_end() || get() != ')') fail("malformed generator g(index)");
    if (digits.size() > 6) fail("generator index too large");
    const int a = std::stoi(digits);
    if (a < 1 || (generators_ > 0 && a > generators_))
      fail("unknown generator g(" + digits + ")");
    return a;
  }

  Rational number() {
    std::string s;
    if (peek() == '-' || peek() == '+') s += get();
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) s += get();
    return parse_rational(s);
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  char get() { return src_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_));
  }

  std::string src_;
  std::size_t pos_ = 0;
  int generators_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int generator_count) {
  return PolyParser(text, generator_count).parse();
}

Rational trace_word(const std::vector<int>& word, const GammaRep& rep) {
  if (word.size() > kMaxWordLength) throw ArgumentError("word longer than 10^4 generators");
  const int n = rep.signature.n();
  SparseMatrix<Rational> acc = rep.identity();
  for (int a : word) {
    if (a < 1 || a > n) throw ParseError("unknown generator g(" + std::to_string(a) + ")");
    acc = acc * rep.gamma(a);
  }
  return acc.trace();
}

Rational trace_polynomial(const Polynomial& p, const GammaRep& rep) {
  Rational total = 0;
  for (const auto& t : p.terms) total += t.coefficient * trace_word(t.word, rep);
  return total;
}

}  // namespace spintime
