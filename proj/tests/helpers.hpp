#pragma once

#include <string>

#include "coxeter/core.hpp"

namespace testing {

inline coxeter::Element elem(const coxeter::CoxeterSystem& sys, const std::string& text) {
  return coxeter::normal_form(sys, coxeter::parse_word(sys, text));
}

inline coxeter::Word word(const coxeter::CoxeterSystem& sys, const std::string& text) {
  return coxeter::parse_word(sys, text);
}

inline std::string show(const coxeter::CoxeterSystem& sys, const coxeter::Element& a) {
  return a.is_identity() ? "e" : coxeter::format_word(sys, a.nf);
}

}  // namespace testing
