// Command line front end: every operation of the library behind one binary
// with machine-readable JSON reports.
//
// Exit codes: 0 all checks pass, 1 checks ran with failures, 2 usage or
// parse error.

#include "lsa/adapted.hpp"
#include "lsa/catalog.hpp"
#include "lsa/format.hpp"
#include "lsa/invariants.hpp"
#include "lsa/subspace.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Usage("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::map<std::string, lsa::Rational> parse_bindings(const std::vector<std::string>& raw) {
  std::map<std::string, lsa::Rational> out;
  for (const auto& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Usage("expected name=value in --param, got: " + item);
    out[item.substr(0, eq)] = lsa::parse_rational(item.substr(eq + 1));
  }
  return out;
}

lsa::SuperAlgebra load(const std::string& path,
                       const std::map<std::string, lsa::Rational>& bindings) {
  return lsa::instantiate(lsa::parse(slurp(path)), bindings);
}

json profile_json(const lsa::InvariantProfile& p) {
  json out;
  out["nilindex"] = p.nilindex ? json(*p.nilindex) : json("NotNilpotent");
  if (p.sNilindex)
    out["sNilindex"] = {p.sNilindex->first, p.sNilindex->second};
  else
    out["sNilindex"] = nullptr;
  out["seriesDims"] = p.seriesDims;
  out["gradedSeriesDims0"] = p.gradedSeriesDims0;
  out["gradedSeriesDims1"] = p.gradedSeriesDims1;
  out["dimRightAnn"] = p.dimRightAnn;
  out["dimLeftAnn"] = p.dimLeftAnn;
  out["dimCenter"] = p.dimCenter;
  if (p.charSeq) {
    out["charSeq"] = {{"even", p.charSeq->evenPart}, {"odd", p.charSeq->oddPart}};
  } else {
    out["charSeq"] = nullptr;
  }
  out["charSeqSamples"] = p.charSeqSamples;
  out["charSeqSeed"] = p.charSeqSeed;
  out["isLie"] = p.isLie;
  out["shape"] = lsa::to_string(p.shape);
  return out;
}

json matrix_json(const lsa::Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(lsa::to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

int emit(const std::string& command, const json& inputs, const json& results,
         const json& failures) {
  json report;
  report["command"] = command;
  report["inputs"] = inputs;
  report["results"] = results;
  report["failures"] = failures;
  std::cout << report.dump(2) << "\n";
  return failures.empty() ? 0 : 1;
}

std::vector<lsa::Rational> parse_exponent_list(const std::string& text) {
  std::vector<lsa::Rational> out;
  std::istringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) out.push_back(lsa::parse_rational(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure-constant calculator for graded two-sided laws"};
  app.require_subcommand(1);

  std::string fileA, fileB, entryName, exponents, scope = "all";
  std::vector<std::string> rawParams;
  int optN = 0, optM = 0;
  int samples = lsa::kCharSeqDefaultSamples;
  std::uint64_t seed = lsa::kCharSeqDefaultSeed;

  auto addFile = [&](CLI::App* cmd, std::string& target, const std::string& name) {
    cmd->add_option(name, target)->required();
  };
  auto addParams = [&](CLI::App* cmd) {
    cmd->add_option("--param", rawParams, "parameter binding name=value");
  };

  auto* cmdCheck = app.add_subcommand("check", "identity defects of a law");
  addFile(cmdCheck, fileA, "file");
  addParams(cmdCheck);

  auto* cmdProfile = app.add_subcommand("profile", "full invariant profile");
  addFile(cmdProfile, fileA, "file");
  addParams(cmdProfile);
  cmdProfile->add_option("--samples", samples);
  cmdProfile->add_option("--seed", seed);

  auto* cmdNilindex = app.add_subcommand("nilindex", "descending central series");
  addFile(cmdNilindex, fileA, "file");
  addParams(cmdNilindex);

  auto* cmdCharseq = app.add_subcommand("charseq", "characteristic sequence");
  addFile(cmdCharseq, fileA, "file");
  addParams(cmdCharseq);
  cmdCharseq->add_option("--samples", samples);
  cmdCharseq->add_option("--seed", seed);

  auto* cmdShape = app.add_subcommand("shape", "zero-filiform / filiform / other");
  addFile(cmdShape, fileA, "file");
  addParams(cmdShape);

  auto* cmdAdapted = app.add_subcommand("adapted-basis", "recover an adapted basis");
  addFile(cmdAdapted, fileA, "file");
  addParams(cmdAdapted);

  auto* cmdDistinguish = app.add_subcommand("distinguish", "first separating invariant");
  addFile(cmdDistinguish, fileA, "a");
  addFile(cmdDistinguish, fileB, "b");
  addParams(cmdDistinguish);

  auto* cmdClosure = app.add_subcommand("closure", "orbit-closure obstructions");
  addFile(cmdClosure, fileA, "lambda");
  addFile(cmdClosure, fileB, "mu");
  addParams(cmdClosure);

  auto* cmdDegenerate = app.add_subcommand("degenerate", "diagonal scaling limit");
  addFile(cmdDegenerate, fileA, "file");
  addParams(cmdDegenerate);
  cmdDegenerate->add_option("--exponents", exponents, "comma-separated, even then odd")
      ->required();

  auto* cmdSum = app.add_subcommand("sum", "direct sum of two laws");
  addFile(cmdSum, fileA, "a");
  addFile(cmdSum, fileB, "b");
  addParams(cmdSum);

  auto* cmdCatalog = app.add_subcommand("catalog", "built-in families");
  auto* cmdList = cmdCatalog->add_subcommand("list", "names, constraints, parameters");
  auto* cmdBuild = cmdCatalog->add_subcommand("build", "emit one family member");
  addFile(cmdBuild, entryName, "name");
  cmdBuild->add_option("--n", optN)->required();
  cmdBuild->add_option("--m", optM)->required();
  addParams(cmdBuild);
  auto* cmdVerify = cmdCatalog->add_subcommand("verify", "run the claim harness");
  cmdVerify->add_option("name", scope);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    json failures = json::array();
    failures.push_back({{"type", "usage"}, {"message", e.what()}});
    emit("usage", json::object(), json::object(), failures);
    return 2;
  }

  try {
    const auto bindings = parse_bindings(rawParams);

    if (*cmdCheck) {
      const auto alg = load(fileA, bindings);
      const auto defects = lsa::leibniz_defects(alg);
      const auto operatorDefects = lsa::operator_identity_defects(alg);
      json failures = json::array();
      for (const auto& d : defects)
        failures.push_back({{"type", "leibniz_defect"},
                            {"triple", {alg.label(d.x), alg.label(d.y), alg.label(d.z)}}});
      for (const auto& d : operatorDefects)
        failures.push_back({{"type", "operator_defect"},
                            {"pair", {alg.label(d.x), alg.label(d.y)}}});
      json results;
      results["leibnizDefects"] = defects.size();
      results["operatorDefects"] = operatorDefects.size();
      results["isLeibniz"] = defects.empty();
      results["isLie"] = defects.empty() && lsa::is_lie(alg);
      return emit("check", {{"file", fileA}}, results, failures);
    }
    if (*cmdProfile) {
      const auto alg = load(fileA, bindings);
      return emit("profile", {{"file", fileA}},
                  profile_json(lsa::invariant_profile(alg, samples, seed)), json::array());
    }
    if (*cmdNilindex) {
      const auto alg = load(fileA, bindings);
      const auto series = lsa::central_series(alg);
      json results;
      results["nilindex"] = series.nilindex ? json(*series.nilindex) : json("NotNilpotent");
      results["seriesDims"] = series.dims();
      return emit("nilindex", {{"file", fileA}}, results, json::array());
    }
    if (*cmdCharseq) {
      const auto alg = load(fileA, bindings);
      const auto cs = lsa::char_sequence(alg, samples, seed);
      json results;
      results["even"] = cs.evenPart;
      results["odd"] = cs.oddPart;
      results["samples"] = samples;
      results["seed"] = seed;
      return emit("charseq", {{"file", fileA}}, results, json::array());
    }
    if (*cmdShape) {
      const auto alg = load(fileA, bindings);
      return emit("shape", {{"file", fileA}},
                  {{"shape", lsa::to_string(lsa::classify_shape(alg))}}, json::array());
    }
    if (*cmdAdapted) {
      const auto alg = load(fileA, bindings);
      const auto g = lsa::adapted_basis_zf(alg);
      const auto transformed = lsa::apply_basis_change(alg, g);
      // The recovered basis is new, so emit it under canonical labels.
      lsa::SuperAlgebra relabeled(transformed.even_dim(), transformed.odd_dim());
      for (std::size_t i = 0; i < transformed.total_dim(); ++i)
        for (std::size_t j = 0; j < transformed.total_dim(); ++j) {
          const lsa::BasisIndex a = i < transformed.even_dim()
                                        ? lsa::BasisIndex{0, i}
                                        : lsa::BasisIndex{1, i - transformed.even_dim()};
          const lsa::BasisIndex b = j < transformed.even_dim()
                                        ? lsa::BasisIndex{0, j}
                                        : lsa::BasisIndex{1, j - transformed.even_dim()};
          const auto value = transformed.bracket_basis(a, b);
          if (!value.is_zero()) relabeled.set_product(a, b, value);
        }
      json results;
      results["map"] = {{"evenBlock", matrix_json(g.evenBlock)},
                        {"oddBlock", matrix_json(g.oddBlock)}};
      results["law"] = lsa::serialize(relabeled);
      return emit("adapted-basis", {{"file", fileA}}, results, json::array());
    }
    if (*cmdDistinguish) {
      const auto a = load(fileA, bindings), b = load(fileB, bindings);
      const auto witness = lsa::distinguish(a, b);
      json results;
      if (witness)
        results["witness"] = {{"invariant", witness->invariantName},
                              {"valueA", witness->valueA},
                              {"valueB", witness->valueB}};
      else
        results["indistinguishable"] = true;
      return emit("distinguish", {{"a", fileA}, {"b", fileB}}, results, json::array());
    }
    if (*cmdClosure) {
      const auto lambda = load(fileA, bindings), mu = load(fileB, bindings);
      json violations = json::array();
      for (const auto& v : lsa::closure_obstruction(lambda, mu))
        violations.push_back({{"condition", v.condition}, {"detail", v.detail}});
      json results;
      results["violations"] = violations;
      results["conclusive"] = !violations.empty();
      return emit("closure", {{"lambda", fileA}, {"mu", fileB}}, results, json::array());
    }
    if (*cmdDegenerate) {
      const auto alg = load(fileA, bindings);
      const auto all = parse_exponent_list(exponents);
      if (all.size() != alg.total_dim())
        throw Usage("expected " + std::to_string(alg.total_dim()) + " exponents");
      lsa::ScalingFamily family;
      family.evenExponents.assign(all.begin(), all.begin() + alg.even_dim());
      family.oddExponents.assign(all.begin() + alg.even_dim(), all.end());
      const auto result = lsa::degeneration_limit(alg, family);
      json results;
      if (result.diverged()) {
        const auto& w = *result.divergence;
        results["diverges"] = {{"left", alg.label(w.left)},
                               {"right", alg.label(w.right)},
                               {"result", alg.label(w.result)},
                               {"exponent", lsa::to_string(w.exponent)}};
      } else {
        results["limit"] = lsa::serialize(*result.limit);
      }
      return emit("degenerate", {{"file", fileA}, {"exponents", exponents}}, results,
                  json::array());
    }
    if (*cmdSum) {
      const auto a = load(fileA, bindings), b = load(fileB, bindings);
      return emit("sum", {{"a", fileA}, {"b", fileB}},
                  {{"law", lsa::serialize(lsa::direct_sum(a, b))}}, json::array());
    }
    if (*cmdList) {
      json list = json::array();
      for (const auto& e : lsa::catalog::entries()) {
        json params = json::array();
        for (const auto& p : e.params)
          params.push_back(
              {{"name", p.name}, {"domain", p.domainNote}, {"required", p.required}});
        list.push_back({{"name", e.name},
                        {"dims", e.dimConstraints},
                        {"params", params},
                        {"note", e.note}});
      }
      return emit("catalog list", json::object(), {{"entries", list}}, json::array());
    }
    if (*cmdBuild) {
      const auto alg = lsa::catalog::build(entryName, optN, optM, bindings);
      return emit("catalog build",
                  {{"name", entryName}, {"n", optN}, {"m", optM}},
                  {{"law", lsa::serialize(alg)}}, json::array());
    }
    if (*cmdVerify) {
      const auto report = lsa::catalog::verify(scope);
      json checks = json::array();
      json failures = json::array();
      for (const auto& c : report.checks) {
        json item = {{"entry", c.entry},
                     {"check", c.check},
                     {"pass", c.pass},
                     {"informational", c.informational}};
        if (!c.detail.empty()) item["detail"] = c.detail;
        checks.push_back(item);
        if (!c.pass && !c.informational)
          failures.push_back({{"type", "verify"}, {"entry", c.entry}, {"check", c.check},
                              {"detail", c.detail}});
      }
      json results;
      results["passed"] = report.passed;
      results["failed"] = report.failed;
      results["informational"] = report.informational;
      results["checks"] = checks;
      return emit("catalog verify", {{"scope", scope}}, results, failures);
    }
    throw Usage("no subcommand selected");
  } catch (const lsa::ParseError& e) {
    json failures = json::array();
    failures.push_back({{"type", "parse_error"},
                        {"line", e.line},
                        {"column", e.column},
                        {"message", e.what()}});
    emit("parse", json::object(), json::object(), failures);
    return 2;
  } catch (const Usage& e) {
    json failures = json::array();
    failures.push_back({{"type", "usage"}, {"message", e.what()}});
    emit("usage", json::object(), json::object(), failures);
    return 2;
  } catch (const std::exception& e) {
    json failures = json::array();
    failures.push_back({{"type", "error"}, {"message", e.what()}});
    emit("error", json::object(), json::object(), failures);
    return 2;
  }
}
