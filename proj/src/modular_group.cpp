#include "carkwork/modular_group.hpp"

#include <stdexcept>
#include <utility>

#include "carkwork/error.hpp"

namespace carkwork {

Letter inverse(Letter letter) {
  switch (letter) {
    case Letter::S: return Letter::S;
    case Letter::L: return Letter::L2;
    case Letter::L2: return Letter::L;
  }
  return Letter::S;
}

GroupElement::GroupElement() = default;

GroupElement::GroupElement(Integer p, Integer q, Integer r, Integer s)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {
  if (p_ * s_ - q_ * r_ != 1) {
    throw std::invalid_argument("group element must have determinant 1");
  }
  normalize_sign();
}

GroupElement::GroupElement(Unchecked, Integer p, Integer q, Integer r, Integer s)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {
  normalize_sign();
}

void GroupElement::normalize_sign() {
  const Integer* first = !p_.is_zero() ? &p_ : !q_.is_zero() ? &q_ : !r_.is_zero() ? &r_ : &s_;
  if (first->sign() < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
    s_ = -s_;
  }
}

GroupElement GroupElement::generator(Letter letter) {
  switch (letter) {
    case Letter::S: return {0, -1, 1, 0};
    case Letter::L: return {1, -1, 1, 0};
    case Letter::L2: return {0, -1, 1, -1};
  }
  return {};
}

bool GroupElement::is_identity() const {
  return p_ == 1 && q_.is_zero() && r_.is_zero() && s_ == 1;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  // det(ab) = det(a) det(b) = 1, so the checked constructor is unnecessary.
  return GroupElement(GroupElement::Unchecked{}, a.p_ * b.p_ + a.q_ * b.r_,
                      a.p_ * b.q_ + a.q_ * b.s_, a.r_ * b.p_ + a.s_ * b.r_,
                      a.r_ * b.q_ + a.s_ * b.s_);
}

GroupElement inverse(const GroupElement& a) {
  return GroupElement(GroupElement::Unchecked{}, a.s_, -a.q_, -a.r_, a.p_);
}

std::string_view to_string(ElementClass c) {
  switch (c) {
    case ElementClass::elliptic: return "elliptic";
    case ElementClass::parabolic: return "parabolic";
    case ElementClass::hyperbolic: return "hyperbolic";
  }
  return "";
}

ElementClass classify_element(const GroupElement& w) {
  const Integer t = abs(w.trace());
  if (t < 2) {
    return ElementClass::elliptic;
  }
  return t == 2 ? ElementClass::parabolic : ElementClass::hyperbolic;
}

namespace {

bool is_rotation(Letter letter) { return letter != Letter::S; }

}  // namespace

bool is_normal_form(std::span<const Letter> letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (is_rotation(letters[i - 1]) == is_rotation(letters[i])) {
      return false;
    }
  }
  return true;
}

Word::Word(Letters letters) : letters_(std::move(letters)) {
  if (!is_normal_form(letters_)) {
    throw DomainError(ErrorCode::invalid_word,
                      "word '" + carkwork::to_string(letters_) + "' is not in normal form");
  }
}

Word Word::parse(std::string_view text) { return Word(parse_letters(text)); }

std::string Word::to_string() const { return carkwork::to_string(letters_); }

Letters parse_letters(std::string_view text) {
  Letters out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'S') {
      out.push_back(Letter::S);
    } else if (text[i] == 'L') {
      if (i + 1 < text.size() && text[i + 1] == 'L') {
        out.push_back(Letter::L2);
        ++i;
      } else {
        out.push_back(Letter::L);
      }
    } else {
      throw DomainError(ErrorCode::invalid_word,
                        "unexpected character in word: '" + std::string(text) + "'");
    }
  }
  return out;
}

std::string to_string(std::span<const Letter> letters) {
  std::string out;
  out.reserve(letters.size() * 2);
  for (Letter letter : letters) {
    switch (letter) {
      case Letter::S: out += 'S'; break;
      case Letter::L: out += 'L'; break;
      case Letter::L2: out += "LL"; break;
    }
  }
  return out;
}

GroupElement word_to_matrix(std::span<const Letter> letters) {
  static const GroupElement gens[] = {GroupElement::generator(Letter::S),
                                      GroupElement::generator(Letter::L),
                                      GroupElement::generator(Letter::L2)};
  GroupElement m;
  for (Letter letter : letters) {
    m = m * gens[static_cast<int>(letter)];
  }
  return m;
}

Word free_reduce(std::span<const Letter> letters) {
  // L-blocks are exponents mod 3: L = 1, L2 = 2.
  Letters stack;
  stack.reserve(letters.size());
  for (Letter letter : letters) {
    if (stack.empty()) {
      stack.push_back(letter);
      continue;
    }
    const Letter top = stack.back();
    if (letter == Letter::S) {
      if (top == Letter::S) {
        stack.pop_back();
      } else {
        stack.push_back(letter);
      }
      continue;
    }
    if (top == Letter::S) {
      stack.push_back(letter);
      continue;
    }
    const int exponent = ((top == Letter::L ? 1 : 2) + (letter == Letter::L ? 1 : 2)) % 3;
    stack.pop_back();
    if (exponent != 0) {
      stack.push_back(exponent == 1 ? Letter::L : Letter::L2);
    }
  }
  return Word(std::move(stack));
}

Word matrix_to_word(const GroupElement& m) {
  // Euclid on the first column: m = T^k1 S T^k2 S ... T^kn with T = (1 1; 0 1).
  // T = L S and T^-1 = S L2 in PSL2(Z).
  Letters raw;
  auto push_translation = [&raw](Integer k) {
    const bool positive = k.sign() > 0;
    k = abs(k);
    for (Integer i = 0; i < k; ++i) {
      if (positive) {
        raw.push_back(Letter::L);
        raw.push_back(Letter::S);
      } else {
        raw.push_back(Letter::S);
        raw.push_back(Letter::L2);
      }
    }
  };

  Integer p = m.p(), q = m.q(), r = m.r(), s = m.s();
  while (!r.is_zero()) {
    // m = T^k (p - k r, q - k s; r, s) and that equals S^-1 (r, s; -(p - kr), -(q - ks)).
    const Integer k = floor_div(p, r);
    push_translation(k);
    raw.push_back(Letter::S);
    Integer np = r, nq = s, nr = -(p - k * r), ns = -(q - k * s);
    p = std::move(np);
    q = std::move(nq);
    r = std::move(nr);
    s = std::move(ns);
  }
  // Remaining factor is +-(1 n; 0 1).
  push_translation(p.sign() > 0 ? q : Integer(-q));

  Word w = free_reduce(raw);
  if (word_to_matrix(w) != m) {
    throw DomainError(ErrorCode::internal, "matrix_to_word failed to reproduce its input");
  }
  return w;
}

Word word_meet(const Word& w, const Word& w2) {
  const auto& a = w.letters();
  const auto& b = w2.letters();
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[n] == b[n]) {
    ++n;
  }
  return Word(Letters(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n)));
}

}  // namespace carkwork
