#include "sps/io.hpp"

#include "sps/errors.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace sps {
namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const Json& require_member(const Json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) throw ParseError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path, std::string("missing member \"") + key + "\"");
  return *it;
}

const Json& require_array(const Json& v, const std::string& path) {
  if (!v.is_array()) throw ParseError(path, "expected an array");
  return v;
}

const std::string& require_string(const Json& v, const std::string& path) {
  if (!v.is_string()) throw ParseError(path, "expected a string (numbers are written as strings)");
  return v.get_ref<const std::string&>();
}

Integer parse_exponent(const Json& v, const std::string& path) {
  try {
    return parse_natural(require_string(v, path));
  } catch (const InvalidArgument& e) {
    throw ParseError(path, e.what());
  }
}

MultivariateSparsePoly parse_polynomial(const Json& v, const std::string& path, std::size_t variables) {
  const std::string mpath = child(path, "monomials");
  const Json& monos = require_array(require_member(v, path, "monomials"), mpath);
  std::vector<MultiMonomial> terms;
  terms.reserve(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) {
    const std::string ipath = child(mpath, i);
    MultiMonomial mono;
    const std::string cpath = child(ipath, "coeff");
    try {
      mono.coeff = parse_rational(require_string(require_member(monos[i], ipath, "coeff"), cpath));
    } catch (const InvalidArgument& e) {
      throw ParseError(cpath, e.what());
    }
    const std::string epath = child(ipath, "exponents");
    const Json& exps = require_array(require_member(monos[i], ipath, "exponents"), epath);
    if (exps.size() != variables) {
      throw ParseError(epath, "expected " + std::to_string(variables) + " exponents, got " +
                                  std::to_string(exps.size()));
    }
    for (std::size_t j = 0; j < exps.size(); ++j) mono.exponents.push_back(parse_exponent(exps[j], child(epath, j)));
    terms.push_back(std::move(mono));
  }
  return MultivariateSparsePoly::from_terms(variables, std::move(terms));
}

Json multivariate_to_json(const MultivariateSparsePoly& p) {
  Json monos = Json::array();
  for (const auto& m : p.monomials()) {
    Json exps = Json::array();
    for (const auto& e : m.exponents) exps.push_back(to_string(e));
    monos.push_back(Json{{"coeff", to_string(m.coeff)}, {"exponents", std::move(exps)}});
  }
  return Json{{"monomials", std::move(monos)}};
}

Json integer_list(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

SpsExpression ExpressionFile::univariate() const { return to_univariate(expr); }

ExpressionFile parse_expression(const Json& doc) {
  ExpressionFile file;
  const Json& vars = require_array(require_member(doc, "", "variables"), "/variables");
  if (vars.empty()) throw ParseError("/variables", "at least one variable is required");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string& name = require_string(vars[i], child("/variables", i));
    if (name.empty()) throw ParseError(child("/variables", i), "variable name is empty");
    if (!seen.insert(name).second) throw ParseError(child("/variables", i), "duplicate variable \"" + name + "\"");
    file.variables.push_back(name);
  }
  const std::size_t n = file.variables.size();
  file.expr.variables = n;

  const Json& factors = require_array(require_member(doc, "", "factors"), "/factors");
  for (std::size_t j = 0; j < factors.size(); ++j) {
    file.expr.factors.push_back(parse_polynomial(factors[j], child("/factors", j), n));
  }

  const Json& terms = require_array(require_member(doc, "", "terms"), "/terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tpath = child("/terms", i);
    MultivariateTerm term;
    const std::string apath = child(tpath, "alphas");
    const Json& alphas = require_array(require_member(terms[i], tpath, "alphas"), apath);
    for (std::size_t j = 0; j < alphas.size(); ++j) term.alphas.push_back(parse_exponent(alphas[j], child(apath, j)));
    if (auto it = terms[i].find("g"); it != terms[i].end()) term.g = parse_polynomial(*it, child(tpath, "g"), n);
    file.expr.terms.push_back(std::move(term));
  }
  return file;
}

ExpressionFile parse_expression_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  return parse_expression(doc);
}

ExpressionFile read_expression_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_expression_text(buf.str());
}

ExpressionFile from_univariate(const SpsExpression& expr, std::string variable) {
  ExpressionFile file;
  file.variables.push_back(std::move(variable));
  file.expr.variables = 1;
  for (const auto& f : expr.factors) file.expr.factors.push_back(MultivariateSparsePoly::from_univariate(f));
  for (const auto& t : expr.terms) file.expr.terms.push_back({t.alphas, MultivariateSparsePoly::from_univariate(t.g)});
  return file;
}

Json to_json(const ExpressionFile& file) {
  Json factors = Json::array();
  for (const auto& f : file.expr.factors) factors.push_back(multivariate_to_json(f));
  Json terms = Json::array();
  for (const auto& t : file.expr.terms) {
    Json term{{"alphas", integer_list(t.alphas)}};
    if (t.g) term["g"] = multivariate_to_json(*t.g);
    terms.push_back(std::move(term));
  }
  return Json{{"variables", file.variables}, {"factors", std::move(factors)}, {"terms", std::move(terms)}};
}

std::string canonical_text(const ExpressionFile& file) { return to_json(file).dump(); }

std::string digest(const ExpressionFile& file) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : canonical_text(file)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + hex;
}

Json polynomial_to_json(const SparsePoly& p) {
  Json monos = Json::array();
  for (const auto& m : p.monomials()) {
    monos.push_back(Json{{"coeff", to_string(m.coeff)}, {"exponents", Json::array({to_string(m.exponent)})}});
  }
  return Json{{"monomials", std::move(monos)}};
}

Json trace_to_json(const PitVerdict& verdict) {
  Json levels = Json::array();
  for (const auto& l : verdict.trace.levels) {
    Json entry{{"level", std::to_string(l.level)}};
    entry["pivot_term"] = l.pivot_original_index ? Json(std::to_string(*l.pivot_original_index + 1)) : Json(nullptr);
    entry["active_terms"] = std::to_string(l.active_term_count);
    entry["max_degree"] = to_string(l.max_degree);
    entry["leading_sum"] = l.leading_coeff_sum ? Json(to_string(*l.leading_coeff_sum)) : Json(nullptr);
    entry["passed"] = l.passed;
    levels.push_back(std::move(entry));
  }
  return Json{{"is_zero", verdict.is_zero}, {"g_k_is_zero", verdict.trace.g_k_is_zero}, {"trace", std::move(levels)}};
}

Json bounds_to_json(const BoundReport& r) {
  Json out;
  out["k"] = std::to_string(r.k);
  out["m"] = std::to_string(r.m);
  out["t"] = std::to_string(r.t);
  out["h"] = std::to_string(r.h);
  out["descartes"] = r.descartes ? Json(to_string(*r.descartes)) : Json(nullptr);
  out["sps1_bound"] = to_string(r.sps1_bound);
  out["h_sequence_naive"] = integer_list(r.h_sequence_naive);
  out["naive_bound"] = to_string(r.naive_bound);
  out["support_set_size"] = std::to_string(r.support_set_size);
  out["h_sequence_support"] = integer_list(r.h_sequence_support);
  out["support_bound_formula"] = to_string(r.support_bound_formula);
  out["support_bound"] = to_string(r.support_bound);
  out["exact_sumset_sizes"] = r.exact_sumset_sizes ? integer_list(*r.exact_sumset_sizes) : Json(nullptr);
  out["sumset_cap_exceeded"] = r.sumset_cap_exceeded;
  out["support_le_naive"] = r.support_le_naive;
  return out;
}

}  // namespace sps
