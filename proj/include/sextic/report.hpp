#pragma once

// Pipelines run on corpus records, and their text and JSON renderings.
// JSON objects keep insertion order so that output is stable across runs.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sextic/conic.hpp"
#include "sextic/database.hpp"

namespace sextic {

using Json = nlohmann::ordered_json;

struct VerifyResult {
  int id = 0;
  std::string name;
  Certificate cert;
  std::string error;  // set when the record could not be built
  bool ok = false;
};

VerifyResult verify_record(const CurveRecord& r, const CertifyOptions& opts = {});

struct DualResult {
  int id = 0;
  int degree = 0;
  int k = 0;         // singular points of the curve
  int expected = 0;  // 30 − 19 − k
  std::optional<std::vector<SingularityType>> singularities;
  bool ok = false;  // degree law, and the printed or autodual multiset when classified
  std::string detail;
};

/// The dual curve's degree; with `classify` its singularities as well,
/// compared with the record's printed dual data when there is any.
DualResult dual_record(const CurveRecord& r, bool classify, const CertifyOptions& opts = {});

struct ReduceResult {
  int id = 0;
  PencilReduction red;
  std::optional<ConicProblem> conic;  // over Q
  std::optional<ProofTrace> proof;    // over Q(√−7)
  std::string conic_equation;         // the reduced conic, as text
  std::vector<std::string> notes;
  bool ok = false;
};

/// Pencil reduction of a record with a printed sextic and pencil (34, 36),
/// then the local argument for the resulting conic.
ReduceResult reduce_record(const CurveRecord& r);

std::string field_name(const FieldDescriptor& f, bool e);

Json summary_json(const CurveRecord& r);
std::string summary_text(const CurveRecord& r);

Json verify_json(const VerifyResult& v);
std::string verify_text(const VerifyResult& v);

Json dual_json(const DualResult& d);
std::string dual_text(const DualResult& d);

Json reduce_json(const ReduceResult& r);
std::string reduce_text(const ReduceResult& r);

Json conic_json(const ConicProblem& c);
std::string conic_text(const ConicProblem& c);

Json proof_json(const ProofTrace& t);
std::string proof_text(const ProofTrace& t);

Json crosscheck_json(const CrossCheck& c);

}  // namespace sextic
