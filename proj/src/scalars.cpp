#include "neck/scalars.hpp"

#include <sstream>

namespace neck {

std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

HPoly::HPoly(const Rat& constant) {
  if (constant != 0) terms_[0] = constant;
}

HPoly HPoly::monomial(const Rat& coeff, int exp2) {
  HPoly p;
  if (coeff != 0) p.terms_[exp2] = coeff;
  return p;
}

HPoly HPoly::operator+(const HPoly& o) const {
  HPoly out = *this;
  for (const auto& [e, c] : o.terms_) {
    Rat& slot = out.terms_[e];
    slot += c;
    if (slot == 0) out.terms_.erase(e);
  }
  return out;
}

HPoly HPoly::operator-() const {
  HPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

HPoly HPoly::operator-(const HPoly& o) const { return *this + (-o); }

HPoly HPoly::operator*(const HPoly& o) const {
  HPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Rat& slot = out.terms_[e1 + e2];
      slot += c1 * c2;
      if (slot == 0) out.terms_.erase(e1 + e2);
    }
  return out;
}

HPoly HPoly::scale(const Rat& c) const {
  HPoly out;
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_[e] = v * c;
  return out;
}

Rat HPoly::coeff(int exp2) const {
  auto it = terms_.find(exp2);
  return it == terms_.end() ? Rat(0) : it->second;
}

HPoly HPoly::mod_h() const { return HPoly(constant()); }

Rat HPoly::eval_at_one() const {
  Rat sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

HPoly HPoly::div_h() const {
  HPoly out;
  for (const auto& [e, c] : terms_) {
    if (e < 2)
      throw Error(ErrorKind::Divisibility,
                  "term of h-degree " + std::to_string(e) + "/2 in '" + str() +
                      "' is not divisible by h");
    out.terms_[e - 2] = c;
  }
  return out;
}

bool HPoly::is_integral() const {
  for (const auto& [e, c] : terms_)
    if (e < 0 || e % 2 != 0) return false;
  return true;
}

const HPoly& HPoly::assert_integral() const {
  for (const auto& [e, c] : terms_) {
    if (e < 0 || e % 2 != 0)
      throw Error(ErrorKind::Integrality,
                  "term " + to_string(c) + "*h^(" + std::to_string(e) +
                      "/2) has a non-integral or negative exponent");
  }
  return *this;
}

std::string HPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest exponent first, matching the usual written order
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    const bool has_h = e != 0;
    if (!has_h || a != 1) {
      os << a;
      if (has_h) os << "*";
    }
    if (has_h) {
      os << "h";
      if (e != 2) {
        if (e % 2 == 0)
          os << "^" << e / 2;
        else
          os << "^(" << e << "/2)";
      }
    }
  }
  return os.str();
}

}  // namespace neck
