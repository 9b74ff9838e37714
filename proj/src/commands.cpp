#include "sps/commands.hpp"

#include "sps/errors.hpp"
#include "sps/io.hpp"
#include "sps/phi_sequence.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <ostream>

namespace sps {
namespace {

constexpr std::size_t kVerifyEvalPoints = 8;

class Timings {
 public:
  template <class F>
  auto time(const char* name, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    struct Record {
      Timings* self;
      const char* name;
      std::chrono::steady_clock::time_point start;
      ~Record() {
        const std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start;
        self->data_[name] = d.count();
      }
    } record{this, name, start};
    return f();
  }

  void attach(Json& report, bool enabled) const {
    if (enabled) report["timings_ms"] = data_;
  }

 private:
  Json data_ = Json::object();
};

void emit(std::ostream& out, const Json& report) { out << report.dump(2) << '\n'; }

int fail(const char* command, const std::exception& e, std::ostream& out, std::ostream& err) {
  err << "sps " << command << ": " << e.what() << '\n';
  Json error{{"message", e.what()}};
  if (const auto* invalid = dynamic_cast<const InvalidExpression*>(&e)) {
    error["violations"] = invalid->violations();
    for (const auto& v : invalid->violations()) err << "  " << v << '\n';
  }
  if (const auto* parse = dynamic_cast<const ParseError*>(&e)) error["path"] = parse->path();
  emit(out, Json{{"command", command}, {"error", std::move(error)}});
  return kExitError;
}

/// Univariate expression to work on; multivariate input goes through Kronecker.
SpsExpression reduce_input(const ExpressionFile& file, const std::optional<std::string>& degree) {
  const auto violations = validate(file.expr);
  if (!violations.empty()) throw InvalidExpression(violations);
  if (file.expr.variables == 1) return file.univariate();
  std::optional<Integer> d;
  if (degree) d = parse_natural(*degree);
  return kronecker_reduce(file.expr, d);
}

Json refused(const std::exception& e) { return Json{{"status", "refused"}, {"message", e.what()}}; }

}  // namespace

std::size_t sumset_cap_from_env() {
  const char* raw = std::getenv("SPS_MAX_SUMSET");
  if (raw == nullptr || *raw == '\0') return kDefaultSumsetCap;
  const Integer v = parse_natural(raw);
  if (v < 1 || !v.fits_ulong_p()) throw InvalidArgument("SPS_MAX_SUMSET must be a positive machine integer");
  return v.get_ui();
}

int run_pit(const PitOptions& options, std::ostream& out, std::ostream& err) {
  try {
    Timings timings;
    const ExpressionFile file = timings.time("parse", [&] { return read_expression_file(options.path); });
    const SpsExpression expr = timings.time("reduce", [&] { return reduce_input(file, options.kronecker_degree); });
    const PitVerdict verdict = timings.time("pit", [&] {
      return options.exact_oracle ? pit_decide_with_oracle(expr, exact_power_sum_oracle()) : pit_decide(expr);
    });
    Json report{{"command", "pit"}, {"input_digest", digest(file)}};
    report["oracle"] = options.exact_oracle ? "exact" : "none";
    if (file.expr.variables > 1) report["kronecker_digest"] = digest(from_univariate(expr));
    report["verdict"] = trace_to_json(verdict);
    timings.attach(report, options.timings);
    emit(out, report);
    return verdict.is_zero ? kExitZero : kExitNonzero;
  } catch (const std::exception& e) {
    return fail("pit", e, out, err);
  }
}

int run_bounds(const BoundsOptions& options, std::ostream& out, std::ostream& err) {
  try {
    Timings timings;
    const ExpressionFile file = timings.time("parse", [&] { return read_expression_file(options.path); });
    if (file.expr.variables != 1) throw InvalidArgument("bounds requires a univariate expression");
    const SpsExpression expr = file.univariate();
    BoundOptions bo;
    bo.exact_sumsets = options.exact_sumsets;
    bo.sumset_cap = options.sumset_cap ? *options.sumset_cap : sumset_cap_from_env();
    const BoundReport bounds = timings.time("bounds", [&] { return evaluate_bounds(expr, bo); });
    Json report{{"command", "bounds"}, {"input_digest", digest(file)}};
    report["exact_sumsets"] = options.exact_sumsets;
    report["bounds"] = bounds_to_json(bounds);
    timings.attach(report, options.timings);
    emit(out, report);
    return kExitZero;
  } catch (const std::exception& e) {
    return fail("bounds", e, out, err);
  }
}

int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  try {
    Timings timings;
    ExpressionFile file;
    if (options.pw) {
      SpsExpression fixture;
      fixture.factors.push_back(pw_fixture(*options.pw));
      fixture.terms.push_back({{Integer(1)}, SparsePoly::constant(Rational(1))});
      file = from_univariate(fixture);
    } else {
      file = timings.time("parse", [&] { return read_expression_file(options.path); });
    }
    const SpsExpression expr = reduce_input(file, std::nullopt);

    Json report{{"command", "verify"}, {"input_digest", digest(file)}, {"seed", std::to_string(options.seed)}};
    if (options.pw) report["pw"] = std::to_string(*options.pw);
    Json verify = Json::object();
    bool inconsistent = false;

    std::optional<bool> expansion_zero;
    std::optional<SparsePoly> expanded;
    timings.time("expand", [&] {
      try {
        expanded = expand_expression(expr, options.max_expand);
        expansion_zero = expanded->is_zero();
        verify["expansion"] = Json{{"status", "ok"}, {"is_zero", *expansion_zero}};
        verify["expanded_sparsity"] = std::to_string(expanded->sparsity());
      } catch (const CapExceeded& e) {
        verify["expansion"] = refused(e);
        verify["expanded_sparsity"] = nullptr;
      }
    });

    timings.time("sturm", [&] {
      verify["sturm_roots"] = nullptr;
      if (!expanded) {
        verify["sturm"] = Json{{"status", "skipped"}, {"message", "no expansion"}};
      } else if (expanded->is_zero()) {
        verify["sturm"] = Json{{"status", "skipped"}, {"message", "zero polynomial"}};
      } else {
        try {
          const RootCount rc = sturm_count(*expanded);
          verify["sturm_roots"] = std::to_string(rc.distinct_real_roots);
          verify["sturm"] = Json{{"status", "ok"},
                                 {"positive", std::to_string(rc.positive)},
                                 {"negative", std::to_string(rc.negative)},
                                 {"zero_is_root", rc.zero_is_root}};
        } catch (const CapExceeded& e) {
          verify["sturm"] = refused(e);
        }
      }
    });

    timings.time("identity", [&] {
      Json checks = Json::array();
      const std::vector<LevelState> levels = phi_sequence(expr);
      for (std::size_t l = 0; l + 1 < levels.size(); ++l) {
        Json c{{"level", std::to_string(levels[l].level)}, {"pivot_term", std::to_string(*levels[l].pivot + 1)}};
        try {
          const bool ok = check_transform_identity(levels[l], levels[l + 1], *levels[l].pivot, options.max_expand);
          c["status"] = ok ? "pass" : "fail";
          if (!ok) inconsistent = true;
        } catch (const CapExceeded& e) {
          c["status"] = "refused";
          c["message"] = e.what();
        }
        checks.push_back(std::move(c));
      }
      verify["identity_checks"] = std::move(checks);
    });

    std::optional<bool> witness;
    timings.time("random_eval", [&] {
      try {
        witness = !random_eval_check(expr, kVerifyEvalPoints, options.seed);
        verify["random_eval"] = Json{{"status", "ok"},
                                     {"points", std::to_string(kVerifyEvalPoints)},
                                     {"nonzero_witness", *witness}};
      } catch (const CapExceeded& e) {
        verify["random_eval"] = refused(e);
      }
    });

    if (file.expr.variables > 1) {
      timings.time("multivariate", [&] {
        try {
          const bool mz = expand_multivariate(file.expr, options.max_expand).is_zero();
          verify["multivariate_expansion"] = Json{{"status", "ok"}, {"is_zero", mz}};
          if (expansion_zero && *expansion_zero != mz) inconsistent = true;
        } catch (const CapExceeded& e) {
          verify["multivariate_expansion"] = refused(e);
        }
      });
    }

    std::optional<bool> pit_zero;
    timings.time("pit", [&] {
      try {
        const PitVerdict verdict = pit_decide(expr);
        pit_zero = verdict.is_zero;
        report["verdict"] = trace_to_json(verdict);
      } catch (const CapExceeded& e) {
        report["verdict"] = refused(e);
      }
    });

    if (pit_zero && expansion_zero) {
      const bool agree = *pit_zero == *expansion_zero;
      verify["agreement"] = agree;
      if (!agree) inconsistent = true;
    } else {
      verify["agreement"] = nullptr;
    }
    if (pit_zero && witness && *pit_zero && *witness) inconsistent = true;
    verify["consistent"] = !inconsistent;

    report["verify"] = std::move(verify);
    timings.attach(report, options.timings);
    emit(out, report);
    return inconsistent ? kExitNonzero : kExitZero;
  } catch (const std::exception& e) {
    return fail("verify", e, out, err);
  }
}

}  // namespace sps
