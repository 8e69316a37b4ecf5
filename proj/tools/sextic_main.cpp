// sextic: command line front end for the curve corpus.
//
// Exit status: 0 when every requested check passed, 1 on a verification
// failure, 2 on usage or input errors.

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "CLI11.hpp"
#include "sextic/report.hpp"

using namespace sextic;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

struct Options {
  bool json = false;
  bool lenient = false;
  std::string corpus;
  int truncation = 0;
  int jobs = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Corpus open_corpus(const Options& o) {
  std::string path = o.corpus.empty() ? default_corpus_path() : o.corpus;
  return load_corpus(path, !o.lenient);
}

const CurveRecord& record_or_throw(const Corpus& c, int id) {
  try {
    return c.get(id);
  } catch (const std::out_of_range&) {
    throw UsageError("unknown curve id " + std::to_string(id));
  }
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

BigRational rational_arg(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw UsageError("not a rational number: " + s);
  }
}

std::vector<int> resolve_ids(const Corpus& c, std::vector<int> ids, bool all) {
  if (all) {
    ids.clear();
    for (const auto& r : c.records) ids.push_back(r.id);
  }
  if (ids.empty()) throw UsageError("give curve ids or --all");
  for (int id : ids) record_or_throw(c, id);
  return ids;
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads.
template <class F>
void parallel_for(int n, int jobs, F fn) {
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min(jobs, n);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i; (i = next++) < n;) fn(i);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

int cmd_list(const Options& o) {
  Corpus c = open_corpus(o);
  Json arr = Json::array();
  std::string text;
  for (const auto& r : c.records) {
    arr.push_back(summary_json(r));
    text += summary_text(r) + "\n";
  }
  emit(o, Json{{"records", arr}}, text);
  return kOk;
}

int cmd_show(const Options& o, int id) {
  Corpus c = open_corpus(o);
  const CurveRecord& r = record_or_throw(c, id);
  std::string rec = serialize_record(r);
  emit(o, Json::parse(rec), summary_text(r) + "\n" + rec);
  return kOk;
}

int cmd_verify(const Options& o, const std::vector<int>& ids_in, bool all) {
  Corpus c = open_corpus(o);
  std::vector<int> ids = resolve_ids(c, ids_in, all);
  std::vector<VerifyResult> results(ids.size());
  CertifyOptions opts;
  opts.truncation = o.truncation;
  std::mutex out;
  parallel_for(static_cast<int>(ids.size()), o.jobs, [&](int i) {
    results[i] = verify_record(c.get(ids[i]), opts);
    if (!o.json) {
      std::lock_guard<std::mutex> lock(out);
      std::cout << verify_text(results[i]) << std::flush;
    }
  });
  int passed = 0;
  Json arr = Json::array();
  for (const auto& v : results) {
    passed += v.ok;
    arr.push_back(verify_json(v));
  }
  const bool ok = passed == static_cast<int>(results.size());
  if (o.json) std::cout << Json{{"command", "verify"}, {"results", arr}, {"passed", passed}, {"total", results.size()}, {"ok", ok}}.dump(2) << "\n";
  else std::cout << passed << "/" << results.size() << " curves certified\n";
  return ok ? kOk : kFailed;
}

int cmd_check(const Options& o, const std::vector<int>& ids_in, bool all) {
  Corpus c = open_corpus(o);
  std::vector<int> ids = resolve_ids(c, ids_in, all);
  Json arr = Json::array();
  bool ok = true;
  for (int id : ids) {
    CrossCheck cc = cross_check_record(c.get(id));
    ok = ok && cc.ok;
    arr.push_back(crosscheck_json(cc));
    if (!o.json) {
      std::cout << "case " << id << "  " << (cc.ok ? "ok" : "FAIL") << "\n";
      for (const auto& s : cc.checks) std::cout << "  + " << s << "\n";
      for (const auto& s : cc.failures) std::cout << "  - " << s << "\n";
    }
  }
  if (o.json) std::cout << Json{{"command", "check"}, {"results", arr}, {"ok", ok}}.dump(2) << "\n";
  return ok ? kOk : kFailed;
}

int cmd_implicitize(const Options& o, int id) {
  Corpus c = open_corpus(o);
  BuiltCurve b = build(record_or_throw(c, id).param);
  int md = 0;
  TriPoly f = implicitize(b.curve, &md);
  std::string eq = f.to_string({"X", "Y", "Z"});
  emit(o, Json{{"id", id}, {"degree", f.degree()}, {"map_degree", md}, {"field", b.e->describe()}, {"equation", eq}},
       "case " + std::to_string(id) + "  degree " + std::to_string(f.degree()) + ", map degree " +
           std::to_string(md) + "\n" + eq + " = 0\n");
  return f.degree() == 6 && md == 1 ? kOk : kFailed;
}

int cmd_dual(const Options& o, const std::vector<int>& ids_in, bool all, bool classify) {
  Corpus c = open_corpus(o);
  std::vector<int> ids = resolve_ids(c, ids_in, all);
  CertifyOptions opts;
  opts.truncation = o.truncation;
  std::vector<DualResult> results(ids.size());
  parallel_for(static_cast<int>(ids.size()), o.jobs,
               [&](int i) { results[i] = dual_record(c.get(ids[i]), classify, opts); });
  bool ok = true;
  Json arr = Json::array();
  for (const auto& d : results) {
    ok = ok && d.ok;
    arr.push_back(dual_json(d));
    if (!o.json) std::cout << dual_text(d);
  }
  if (o.json) std::cout << Json{{"command", "dual"}, {"results", arr}, {"ok", ok}}.dump(2) << "\n";
  return ok ? kOk : kFailed;
}

int cmd_reduce(const Options& o, int id) {
  Corpus c = open_corpus(o);
  const CurveRecord& r = record_or_throw(c, id);
  if (!r.pencil || !r.printed_implicit) throw UsageError("case " + std::to_string(id) + " has no pencil data");
  ReduceResult res = reduce_record(r);
  emit(o, reduce_json(res), reduce_text(res));
  return res.ok ? kOk : kFailed;
}

int cmd_hilbert(const Options& o, const std::string& a, const std::string& b, const std::string& p) {
  Place v = 0;
  if (p != "inf" && p != "oo" && p != "0") {
    try {
      v = std::stol(p);
    } catch (const std::exception&) {
      throw UsageError("place must be a prime or inf");
    }
  }
  int s;
  try {
    s = hilbert_symbol(rational_arg(a), rational_arg(b), v);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(o, Json{{"a", a}, {"b", b}, {"place", v == 0 ? Json("inf") : Json(v)}, {"symbol", s}},
       "(" + a + ", " + b + ")_" + (v == 0 ? std::string("inf") : std::to_string(v)) + " = " + std::to_string(s) + "\n");
  return kOk;
}

int cmd_conic(const Options& o, const std::string& a, const std::string& b) {
  BigRational qa = rational_arg(a), qb = rational_arg(b);
  if (qa == 0 || qb == 0) throw UsageError("conic coefficients must be nonzero");
  ConicProblem c = conic_solvable_over_Q(qa, qb);
  emit(o, conic_json(c), conic_text(c));
  return c.verdict == ConicProblem::Verdict::Undecided ? kFailed : kOk;
}

int cmd_case34(const Options& o) {
  ProofTrace t = verify_case34_obstruction();
  emit(o, proof_json(t), proof_text(t));
  return t.ok() ? kOk : kFailed;
}

int cmd_case24(const Options& o) {
  bool ok = verify_case24_solution();
  emit(o, Json{{"equation", "(2-a)*X^2 - 5*a*(a+2)*Y^2 - Z^2"}, {"X", "2 + 2*a^2"}, {"Y", "1 + a - a^2"}, {"Z", "2 - a^2"}, {"ok", ok}},
       std::string("(2-a)X^2 - 5a(a+2)Y^2 - Z^2 at (2+2a^2, 1+a-a^2, 2-a^2): ") + (ok ? "zero" : "NONZERO") + "\n");
  return ok ? kOk : kFailed;
}

int cmd_refresh(const Options& o, const std::string& out_path) {
  Options lenient = o;
  lenient.lenient = true;
  Corpus c = open_corpus(lenient);
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write " + out_path);
  out << serialize_corpus(c);
  std::cout << "wrote " << c.records.size() << " records, checksum " << corpus_checksum(c) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of rational sextics with maximal total Milnor number"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--corpus", o.corpus, "Corpus file (default: $SEXTIC_CORPUS or the bundled one)");
  app.add_flag("--lenient", o.lenient, "Recompute stored coefficients and checksum instead of requiring them");
  app.add_option("--truncation", o.truncation, "Series truncation order (default: per claim)")->check(CLI::PositiveNumber);
  app.add_option("-j,--jobs", o.jobs, "Worker threads (default: available parallelism)")->check(CLI::NonNegativeNumber);

  int id = 0;
  std::vector<int> ids;
  bool all = false, classify = false;
  std::string a, b, p, out_path;

  auto* list = app.add_subcommand("list", "One line per curve");
  auto* show = app.add_subcommand("show", "Print one record");
  show->add_option("id", id)->required();
  auto* verify = app.add_subcommand("verify", "Certify the singularity claims");
  verify->add_option("ids", ids);
  verify->add_flag("--all", all);
  auto* check = app.add_subcommand("check", "Internal consistency of records");
  check->add_option("ids", ids);
  check->add_flag("--all", all);
  auto* impl = app.add_subcommand("implicitize", "Implicit equation of a curve");
  impl->add_option("id", id)->required();
  auto* dualc = app.add_subcommand("dual", "Degree (and singularities) of the dual curve");
  dualc->add_option("ids", ids);
  dualc->add_flag("--all", all);
  dualc->add_flag("--singularities", classify, "Also classify the singular points of the dual");
  auto* reduce = app.add_subcommand("reduce", "Pencil reduction to a conic (cases 34, 36)");
  reduce->add_option("id", id)->required();
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert symbol (a, b)_p over Q");
  hilbert->add_option("a", a)->required();
  hilbert->add_option("b", b)->required();
  hilbert->add_option("place", p, "prime or inf")->required();
  auto* conic = app.add_subcommand("conic-solve", "Solvability of a X^2 + b Y^2 = 1 over Q");
  conic->add_option("a", a)->required();
  conic->add_option("b", b)->required();
  auto* c34 = app.add_subcommand("obstruction34", "Congruence argument over Q(sqrt(-7))");
  auto* c24 = app.add_subcommand("solution24", "Check the printed conic point over the cubic field");
  auto* refresh = app.add_subcommand("refresh-corpus", "Recompute coefficients and checksum, write the corpus");
  refresh->add_option("out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*list) return cmd_list(o);
    if (*show) return cmd_show(o, id);
    if (*verify) return cmd_verify(o, ids, all);
    if (*check) return cmd_check(o, ids, all);
    if (*impl) return cmd_implicitize(o, id);
    if (*dualc) return cmd_dual(o, ids, all, classify);
    if (*reduce) return cmd_reduce(o, id);
    if (*hilbert) return cmd_hilbert(o, a, b, p);
    if (*conic) return cmd_conic(o, a, b);
    if (*c34) return cmd_case34(o);
    if (*c24) return cmd_case24(o);
    if (*refresh) return cmd_refresh(o, out_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SchemaError& e) {
    std::cerr << "corpus schema error: " << e.what() << "\n";
    return kUsage;
  } catch (const CorpusInvariantError& e) {
    std::cerr << "corpus check failed: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
