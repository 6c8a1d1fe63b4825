#include "binar/array.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "binar/binomial.hpp"

namespace binar {

namespace {

std::atomic<long> g_pascal_checks{0};

}  // namespace

// ---------------------------------------------------------------------------
// Window

Window::Window(long k_min, long k_max, long n_min, long n_max, std::vector<SeqVec> values)
    : k_min_(k_min), k_max_(k_max), n_min_(n_min), n_max_(n_max), values_(std::move(values)) {
  if (k_min_ < 0 || k_min_ > k_max_ || n_min_ > n_max_)
    throw std::invalid_argument("Window: invalid index range");
  const auto rows = static_cast<std::size_t>(k_max_ - k_min_ + 1);
  const auto cols = static_cast<std::size_t>(n_max_ - n_min_ + 1);
  if (values_.size() != rows)
    throw std::invalid_argument("Window: row count mismatch");
  for (const auto& row : values_)
    if (row.size() != cols) throw std::invalid_argument("Window: column count mismatch");
  verify_pascal();
}

const Scalar& Window::at(long k, long n) const {
  if (k < k_min_ || k > k_max_ || n < n_min_ || n > n_max_)
    throw std::out_of_range("Window::at: index outside window");
  return values_[static_cast<std::size_t>(k - k_min_)][static_cast<std::size_t>(n - n_min_)];
}

void Window::verify_pascal() const {
  // a_{k,n+1} = a_{k-1,n} + a_{k,n} wherever the whole L is inside.
  long checks = 0;
  for (long k = k_min_ + 1; k <= k_max_; ++k)
    for (long n = n_min_; n < n_max_; ++n) {
      if (at(k, n + 1) != at(k - 1, n) + at(k, n))
        throw std::logic_error("Window: Pascal recurrence violated at interior cell");
      ++checks;
    }
  g_pascal_checks += checks;
}

long Window::pascal_checks_performed() { return g_pascal_checks.load(); }

bool operator==(const Window& a, const Window& b) {
  return a.k_min_ == b.k_min_ && a.k_max_ == b.k_max_ && a.n_min_ == b.n_min_ &&
         a.n_max_ == b.n_max_ && a.values_ == b.values_;
}

std::string Window::to_csv() const {
  std::string out = "k\\n";
  for (long n = n_min_; n <= n_max_; ++n) out += "," + std::to_string(n);
  out += "\n";
  for (long k = k_min_; k <= k_max_; ++k) {
    out += std::to_string(k);
    for (long n = n_min_; n <= n_max_; ++n) out += "," + at(k, n).str();
    out += "\n";
  }
  return out;
}

Window Window::from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("k\\n,", 0) != 0)
    throw std::invalid_argument("Window::from_csv: bad header");
  std::vector<long> ns;
  {
    std::istringstream hs(line.substr(4));
    std::string piece;
    while (std::getline(hs, piece, ',')) ns.push_back(std::stol(piece));
  }
  if (ns.empty()) throw std::invalid_argument("Window::from_csv: no columns");
  std::vector<SeqVec> rows;
  std::vector<long> ks;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream rs(line);
    std::string piece;
    if (!std::getline(rs, piece, ',')) throw std::invalid_argument("Window::from_csv: bad row");
    ks.push_back(std::stol(piece));
    SeqVec row;
    while (std::getline(rs, piece, ',')) row.push_back(Scalar::parse(piece));
    if (row.size() != ns.size())
      throw std::invalid_argument("Window::from_csv: row width mismatch");
    rows.push_back(std::move(row));
  }
  if (ks.empty()) throw std::invalid_argument("Window::from_csv: no rows");
  return Window(ks.front(), ks.back(), ns.front(), ns.back(), std::move(rows));
}

std::string Window::to_ascii() const {
  const auto cols = static_cast<std::size_t>(n_max_ - n_min_ + 1);
  std::vector<std::size_t> width(cols + 1, 1);
  for (long n = n_min_; n <= n_max_; ++n)
    width[static_cast<std::size_t>(n - n_min_) + 1] = std::to_string(n).size();
  for (long k = k_min_; k <= k_max_; ++k) {
    width[0] = std::max(width[0], std::to_string(k).size());
    for (long n = n_min_; n <= n_max_; ++n) {
      auto& w = width[static_cast<std::size_t>(n - n_min_) + 1];
      w = std::max(w, at(k, n).str().size());
    }
  }
  std::ostringstream out;
  auto cell = [&](const std::string& s, std::size_t w) {
    out << std::string(w > s.size() ? w - s.size() : 0, ' ') << s;
  };
  cell("k\\n", width[0] + 2);
  for (long n = n_min_; n <= n_max_; ++n)
    cell(std::to_string(n), width[static_cast<std::size_t>(n - n_min_) + 1] + 2);
  out << "\n";
  for (long k = k_min_; k <= k_max_; ++k) {
    cell(std::to_string(k), width[0] + 2);
    for (long n = n_min_; n <= n_max_; ++n)
      cell(at(k, n).str(), width[static_cast<std::size_t>(n - n_min_) + 1] + 2);
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// BinomialArray

BinomialArray::BinomialArray(InitialSequence initial, long origin)
    : initial_(std::move(initial)), origin_(origin) {}

BinomialArray::BinomialArray(const BinomialArray& other) {
  std::lock_guard<std::mutex> lock(other.mu_);
  initial_ = other.initial_;
  origin_ = other.origin_;
  memo_ = other.memo_;
}

BinomialArray& BinomialArray::operator=(const BinomialArray& other) {
  if (this == &other) return *this;
  std::scoped_lock lock(mu_, other.mu_);
  initial_ = other.initial_;
  origin_ = other.origin_;
  memo_ = other.memo_;
  return *this;
}

Scalar BinomialArray::closed_form(long k, long n) const {
  // Normative transform sums over the base initial condition.
  const long deg = initial_.is_zero() ? -1 : *initial_.degree();
  Scalar sum(0);
  if (n >= 0) {
    const long lo = std::max(0L, k - deg);
    const long hi = std::min(n, k);
    for (long i = lo; i <= hi; ++i) sum += binomial(n, i) * initial_.term(k - i);
  } else {
    const long m = -n;
    const long lo = std::max(0L, k - deg);
    for (long i = lo; i <= k; ++i) {
      Scalar c = binomial(m + i - 1, i) * initial_.term(k - i);
      if (i % 2 != 0) c = -c;
      sum += c;
    }
  }
  return sum;
}

Scalar BinomialArray::entry(long k, long n) const {
  if (k < 0) return Scalar(0);
  const long nb = n + origin_;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find({k, nb});
    if (it != memo_.end()) return it->second;
  }
  Scalar v = closed_form(k, nb);
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.emplace(std::make_pair(k, nb), std::move(v)).first->second;
}

Window BinomialArray::window(long k_min, long k_max, long n_min, long n_max) const {
  if (k_min < 0 || k_min > k_max || n_min > n_max)
    throw std::invalid_argument("window: invalid range");
  // Pascal fill column-by-column from column 0 of the base array outward.
  const long b_lo = std::min(0L, n_min + origin_);
  const long b_hi = std::max(0L, n_max + origin_);
  const auto rows = static_cast<std::size_t>(k_max) + 1;
  std::map<long, SeqVec> cols;
  cols[0] = initial_.prefix(k_max + 1);
  for (long n = 0; n < b_hi; ++n) {
    const SeqVec& cur = cols[n];
    SeqVec next(rows, Scalar(0));
    for (std::size_t k = 0; k < rows; ++k)
      next[k] = (k == 0 ? Scalar(0) : cur[k - 1]) + cur[k];
    cols[n + 1] = std::move(next);
  }
  for (long n = 0; n > b_lo; --n) {
    const SeqVec& cur = cols[n];
    SeqVec prev(rows, Scalar(0));
    for (std::size_t k = 0; k < rows; ++k)
      prev[k] = cur[k] - (k == 0 ? Scalar(0) : prev[k - 1]);
    cols[n - 1] = std::move(prev);
  }
  std::vector<SeqVec> grid;
  grid.reserve(static_cast<std::size_t>(k_max - k_min + 1));
  for (long k = k_min; k <= k_max; ++k) {
    SeqVec row;
    row.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (long n = n_min; n <= n_max; ++n)
      row.push_back(cols[n + origin_][static_cast<std::size_t>(k)]);
    grid.push_back(std::move(row));
  }
  return Window(k_min, k_max, n_min, n_max, std::move(grid));
}

std::optional<long> BinomialArray::poly_degree() const {
  if (origin_ != 0) return std::nullopt;
  return initial_.degree();
}

// ---------------------------------------------------------------------------
// Free operations

BinomialArray make_array(InitialSequence initial) { return BinomialArray(std::move(initial)); }

BinomialArray pascal_basis(long j) {
  if (j < 0) throw std::invalid_argument("pascal_basis: j must be >= 0");
  SeqVec coeffs(static_cast<std::size_t>(j) + 1, Scalar(0));
  coeffs.back() = Scalar(1);
  return make_array(InitialSequence(std::move(coeffs)));
}

BinomialArray linear_combination(const std::vector<std::pair<Scalar, BinomialArray>>& terms) {
  if (terms.empty()) throw std::invalid_argument("linear_combination: empty term list");
  SeqVec acc;
  for (const auto& [r, A] : terms) {
    if (A.origin() != 0)
      throw std::domain_error("linear_combination: operand has a non-polynomial shifted origin");
    acc = poly::add(acc, poly::scale(r, A.base_initial().coeffs()));
  }
  return make_array(InitialSequence(std::move(acc)));
}

BinomialArray shift_origin(const BinomialArray& A, long t) {
  InitialSequence init = A.base_initial();
  long origin = A.origin() + t;
  if (init.is_zero()) return BinomialArray(init, 0);
  SeqVec coeffs = init.coeffs();
  static const SeqVec kOnePlusX{Scalar(1), Scalar(1)};
  while (origin > 0) {
    coeffs = poly::multiply(coeffs, kOnePlusX);
    --origin;
  }
  while (origin < 0) {
    auto [q, r] = poly::divide_x_plus_1(coeffs);
    if (!r.is_zero()) break;  // column `origin` is an infinite series; keep the offset
    coeffs = std::move(q);
    ++origin;
  }
  return BinomialArray(InitialSequence(std::move(coeffs)), origin);
}

namespace {

// Taylor coefficients at x = -1 of the (possibly untrimmed) coefficient list.
SeqVec taylor_coeffs(SeqVec p) {
  if (p.empty()) throw std::domain_error("taylor: zero polynomial has no degree");
  SeqVec edge;
  edge.reserve(p.size());
  while (p.size() > 1) {
    auto [q, r] = poly::divide_x_plus_1(p);
    edge.push_back(r);
    q.resize(p.size() - 1, Scalar(0));  // keep the padded length
    p = std::move(q);
  }
  edge.push_back(p[0]);
  return edge;
}

SeqVec require_poly(const BinomialArray& A, const char* op) {
  if (!A.poly_degree())
    throw std::domain_error(std::string(op) + ": requires a polynomial initial condition");
  return A.base_initial().coeffs();
}

}  // namespace

SeqVec taylor_at_minus_one(const InitialSequence& p) {
  if (p.is_zero()) throw std::domain_error("taylor_at_minus_one: zero polynomial");
  return taylor_coeffs(p.coeffs());
}

DiffTable diff_table(const BinomialArray& A) {
  SeqVec p = require_poly(A, "diff_table");
  DiffTable t;
  t.degree = static_cast<long>(p.size()) - 1;
  SeqVec cur(p.rbegin(), p.rend());  // p*(x) = x^m p(1/x), possibly untrimmed
  cur = poly::trim(std::move(cur));
  if (cur.empty()) cur.push_back(Scalar(0));
  t.columns.push_back(cur);
  while (cur.size() > 1) {
    auto [q, r] = poly::divide_x_plus_1(cur);
    t.left_edge.push_back(r);
    cur = std::move(q);
    if (cur.empty()) cur.push_back(Scalar(0));
    t.columns.push_back(cur);
  }
  t.left_edge.push_back(cur[0]);
  return t;
}

BinomialArray reverse_involution(const BinomialArray& A) {
  SeqVec p = require_poly(A, "reverse_involution");
  SeqVec rev(p.rbegin(), p.rend());
  return make_array(InitialSequence(std::move(rev)));
}

BinomialArray trapezoid_interchange(const BinomialArray& A) {
  SeqVec p = require_poly(A, "trapezoid_interchange");
  const std::size_t m = p.size() - 1;
  SeqVec pstar(p.rbegin(), p.rend());     // length m+1, untrimmed
  SeqVec c = taylor_coeffs(std::move(pstar));  // length m+1
  // Reflecting the difference table along rows with sign (-1)^row turns the
  // lower-left Taylor edge into the new rightmost column: a'_i = (-1)^i c_{m-i}.
  SeqVec out(m + 1, Scalar(0));
  for (std::size_t i = 0; i <= m; ++i) {
    out[i] = c[m - i];
    if (i % 2 != 0) out[i] = -out[i];
  }
  return make_array(InitialSequence(std::move(out)));
}

BorderProfile border_profile(const BinomialArray& A) {
  SeqVec p = require_poly(A, "border_profile");
  BorderProfile b;
  b.top = p.front();
  b.diag = p.back();
  Scalar alt(0);
  for (std::size_t i = 0; i < p.size(); ++i) alt += (i % 2 == 0) ? p[i] : -p[i];
  b.col_minus_one_abs = abs(alt);
  return b;
}

}  // namespace binar
