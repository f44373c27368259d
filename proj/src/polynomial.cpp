#include "dualgroth/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "dualgroth/errors.hpp"

namespace dualgroth {

namespace {

// Position-wise lexicographic comparison with implicit trailing zeros.
int lex_compare(const WeakComposition& a, const WeakComposition& b) {
  int len = std::max(a.length(), b.length());
  for (int i = 1; i <= len; ++i) {
    if (a.at(i) != b.at(i)) return a.at(i) < b.at(i) ? -1 : 1;
  }
  return 0;
}

void append_vars(std::ostringstream& os, const char* name, const WeakComposition& exp,
                 bool& first) {
  for (int i = 1; i <= exp.length(); ++i) {
    int e = exp.at(i);
    if (e == 0) continue;
    if (!first) os << '*';
    first = false;
    os << name << i;
    if (e > 1) os << '^' << e;
  }
}

}  // namespace

bool Monomial::operator<(const Monomial& other) const {
  long long da = degree(), db = other.degree();
  if (da != db) return da < db;
  if (int c = lex_compare(xexp, other.xexp); c != 0) return c < 0;
  return lex_compare(texp, other.texp) < 0;
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  append_vars(os, "x", xexp, first);
  append_vars(os, "t", texp, first);
  if (first) return "1";
  return os.str();
}

SparsePoly SparsePoly::constant(Int c) {
  SparsePoly p;
  if (c != 0) p.terms_.emplace(Monomial{}, std::move(c));
  return p;
}

SparsePoly SparsePoly::monomial(Monomial m, Int c) {
  SparsePoly p;
  if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

SparsePoly SparsePoly::x(int i) { return monomial({WeakComposition::unit(i), {}}); }

SparsePoly SparsePoly::t(int i) { return monomial({{}, WeakComposition::unit(i)}); }

const Int& SparsePoly::coeff(const Monomial& m) const {
  static const Int kZero = 0;
  auto it = terms_.find(m);
  return it == terms_.end() ? kZero : it->second;
}

void SparsePoly::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly out = *this;
  out += o;
  return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + (-o); }

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  SparsePoly out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      std::vector<int> xe, te;
      int xlen = std::max(ma.xexp.length(), mb.xexp.length());
      int tlen = std::max(ma.texp.length(), mb.texp.length());
      xe.reserve(static_cast<std::size_t>(xlen));
      te.reserve(static_cast<std::size_t>(tlen));
      for (int i = 1; i <= xlen; ++i) xe.push_back(ma.xexp.at(i) + mb.xexp.at(i));
      for (int i = 1; i <= tlen; ++i) te.push_back(ma.texp.at(i) + mb.texp.at(i));
      out.add_term({WeakComposition(std::move(xe)), WeakComposition(std::move(te))}, ca * cb);
    }
  }
  return out;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) {
  *this = *this * o;
  return *this;
}

SparsePoly SparsePoly::pow(int e) const {
  if (e < 0) throw InvalidArgument("negative power");
  SparsePoly out = constant(1);
  for (int k = 0; k < e; ++k) out *= *this;
  return out;
}

SparsePoly SparsePoly::swap_x(int i) const {
  if (i < 1) throw InvalidArgument("swap_x index must be positive");
  SparsePoly out;
  for (const auto& [m, c] : terms_) {
    out.add_term({m.xexp.swapped(i), m.texp}, c);
  }
  return out;
}

bool SparsePoly::is_symmetric_x(int nvars) const {
  if (nvars < 0) throw InvalidArgument("nvars must be nonnegative");
  if (max_x_var() > nvars) {
    throw VariableOutOfRange("polynomial uses an x variable beyond the declared range");
  }
  for (int i = 1; i + 1 <= nvars; ++i) {
    if (swap_x(i) != *this) return false;
  }
  return true;
}

SparsePoly SparsePoly::permute_x(const std::vector<int>& perm) const {
  SparsePoly out;
  for (const auto& [m, c] : terms_) {
    std::vector<int> xe(perm.size(), 0);
    for (int i = 1; i <= m.xexp.length(); ++i) {
      int e = m.xexp.at(i);
      if (e == 0) continue;
      DG_CHECK(i <= static_cast<int>(perm.size()));
      int img = perm[static_cast<std::size_t>(i) - 1];
      if (static_cast<int>(xe.size()) < img) xe.resize(static_cast<std::size_t>(img), 0);
      xe[static_cast<std::size_t>(img) - 1] += e;
    }
    out.add_term({WeakComposition(std::move(xe)), m.texp}, c);
  }
  return out;
}

SparsePoly SparsePoly::specialize_t(int value) const {
  if (value != 0 && value != 1) throw InvalidArgument("t specialization must be 0 or 1");
  SparsePoly out;
  for (const auto& [m, c] : terms_) {
    if (value == 0 && !m.texp.is_zero()) continue;
    out.add_term({m.xexp, {}}, c);
  }
  return out;
}

SparsePoly SparsePoly::shift_t(int offset) const {
  if (offset < 0) throw InvalidArgument("t shift must be nonnegative");
  if (offset == 0) return *this;
  SparsePoly out;
  for (const auto& [m, c] : terms_) {
    std::vector<int> te(static_cast<std::size_t>(offset), 0);
    for (int i = 1; i <= m.texp.length(); ++i) te.push_back(m.texp.at(i));
    out.add_term({m.xexp, WeakComposition(std::move(te))}, c);
  }
  return out;
}

int SparsePoly::max_x_var() const {
  int m = 0;
  for (const auto& [mono, c] : terms_) m = std::max(m, mono.xexp.length());
  return m;
}

int SparsePoly::max_t_var() const {
  int m = 0;
  for (const auto& [mono, c] : terms_) m = std::max(m, mono.texp.length());
  return m;
}

SparsePoly SparsePoly::x_homogeneous_component(long long d) const {
  SparsePoly out;
  for (const auto& [m, c] : terms_) {
    if (m.xexp.sum() == d) out.add_term(m, c);
  }
  return out;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << '-';
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string vars = m.to_string();
    if (vars == "1") {
      os << a;
    } else {
      if (a != 1) os << a << '*';
      os << vars;
    }
  }
  return os.str();
}

}  // namespace dualgroth
