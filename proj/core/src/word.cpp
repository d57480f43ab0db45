#include "growthlab/word.hpp"

#include <algorithm>

namespace growthlab {

std::string reduce_packed(std::string_view letters) {
  std::string stack;
  stack.reserve(letters.size());
  for (char c : letters) {
    if (!stack.empty() &&
        (static_cast<unsigned char>(stack.back()) ^ 1) == static_cast<unsigned char>(c)) {
      stack.pop_back();
    } else {
      stack.push_back(c);
    }
  }
  return stack;
}

void append_reduced(std::string& lhs, std::string_view rhs) {
  std::size_t i = 0;
  while (i < rhs.size() && !lhs.empty() &&
         (static_cast<unsigned char>(lhs.back()) ^ 1) ==
             static_cast<unsigned char>(rhs[i])) {
    lhs.pop_back();
    ++i;
  }
  lhs.append(rhs.substr(i));
}

Word Word::reduce(const std::vector<Letter>& letters) {
  std::string packed;
  packed.reserve(letters.size());
  for (Letter l : letters) packed.push_back(static_cast<char>(l.code()));
  return Word(reduce_packed(packed));
}

Word Word::inverse() const { return Word(inverse_packed(packed_)); }

Word Word::cyclically_reduced() const {
  std::string_view v = packed_;
  while (v.size() >= 2 &&
         (static_cast<unsigned char>(v.front()) ^ 1) ==
             static_cast<unsigned char>(v.back())) {
    v = v.substr(1, v.size() - 2);
  }
  return Word(std::string(v));
}

int Word::max_generator() const {
  int m = -1;
  for (char c : packed_) m = std::max(m, static_cast<unsigned char>(c) >> 1);
  return m;
}

Word multiply(const Word& u, const Word& v) {
  std::string out = u.packed();
  append_reduced(out, v.packed());
  return Word::from_reduced(std::move(out));
}

Word cyclically_reduce(const Word& w) { return w.cyclically_reduced(); }

}  // namespace growthlab
