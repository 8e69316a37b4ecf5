#pragma once

#include "doctest.h"
#include "properties.hpp"
#include "sextic/database.hpp"

inline void require_property(const props::Result& r) {
  INFO(r.name, " after ", r.cases, " cases: ", r.detail);
  CHECK(r.ok);
}

inline const sextic::Corpus& bundled_corpus() {
  static const sextic::Corpus c = sextic::load_corpus(sextic::default_corpus_path());
  return c;
}

inline sextic::UniPoly upoly(const sextic::FieldPtr& f, const std::string& text, const std::string& var = "t") {
  return sextic::parse_univariate(text, sextic::ExprContext::for_field(f), var);
}

inline sextic::FieldElement constant(const sextic::FieldPtr& f, const std::string& text) {
  return sextic::parse_constant(text, sextic::ExprContext::for_field(f));
}
