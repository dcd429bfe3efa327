// neck: command-line front end for the necklace Lie bialgebra, its Hopf
// quantization, and the differential-operator representation.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "neck/expr.hpp"
#include "neck/hopf.hpp"
#include "neck/lie.hpp"
#include "neck/link.hpp"
#include "neck/weyl.hpp"

using nlohmann::json;
using namespace neck;

namespace {

json rat_json(const Rat& r) {
  return json{{"num", to_string(Rat(boost::multiprecision::numerator(r)))},
              {"den", to_string(Rat(boost::multiprecision::denominator(r)))}};
}

json hpoly_json(const HPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json t = rat_json(c);
    t["exp2"] = e;
    terms.push_back(t);
  }
  return terms;
}

json link_json(const Quiver& q, const Link& l) {
  json cycles = json::array();
  for (const auto& c : l.cycles()) {
    json comp = json::array();
    for (const auto& ha : c)
      comp.push_back(json{{"arrow", q.arrow_name(ha.arrow)}, {"height", ha.height}});
    cycles.push_back(comp);
  }
  json idems = json::array();
  for (int v : l.idems()) idems.push_back(q.vertex_name(v));
  return json{{"cycles", cycles}, {"idems", idems}};
}

json algebra_json(const Quiver& q, const AlgebraElement& x) {
  json out = json::array();
  for (const auto& [l, c] : x.terms())
    out.push_back(json{{"link", link_json(q, l)}, {"coeff", hpoly_json(c)}});
  return out;
}

json tensor_json(const Quiver& q, const TensorElement& t) {
  json out = json::array();
  for (const auto& [k, c] : t.terms()) {
    json factors = json::array();
    for (const auto& l : k) factors.push_back(link_json(q, l));
    out.push_back(json{{"factors", factors}, {"coeff", hpoly_json(c)}});
  }
  return out;
}

json lie_json(const Quiver& q, const LieElement& x) {
  json out = json::array();
  for (const auto& [m, c] : x.terms()) {
    json t = rat_json(c);
    t["monomial"] = m.str(q);
    out.push_back(t);
  }
  return out;
}

json lie_tensor_json(const Quiver& q, const LieTensor& t) {
  json out = json::array();
  for (const auto& [k, c] : t.terms()) {
    json factors = json::array();
    for (const auto& m : k) factors.push_back(m.str(q));
    json row = rat_json(c);
    row["factors"] = factors;
    out.push_back(row);
  }
  return out;
}

json report_json(const Report& r) {
  json ids = json::array();
  for (const auto& i : r.identities)
    ids.push_back(json{{"identity", i.identity},
                       {"cases", i.cases},
                       {"failures", i.failures},
                       {"witness", i.first_witness}});
  return json{{"suite", r.suite}, {"identities", ids}, {"pass", r.pass()}};
}

json weyl_json(const Quiver& q, const WeylElement& w) {
  json out = json::array();
  for (const auto& [m, c] : w.terms()) {
    json gens = json::array();
    for (const auto& g : m.xs) gens.push_back(g.str(q));
    for (const auto& g : m.ds) gens.push_back(g.str(q));
    json row = rat_json(c);
    row["gens"] = gens;
    out.push_back(row);
  }
  return out;
}

json quant_json(const QuantReport& r) {
  json ledger = json::array();
  for (const auto& row : r.ledger)
    ledger.push_back(json{{"cut", row.cut_desc},
                          {"sign", row.sign},
                          {"exp2_active", row.exp2_active},
                          {"exp2_paper", row.exp2_paper},
                          {"exp2_alt", row.exp2_alt},
                          {"output", row.output_desc},
                          {"policy_disagreement", row.policy_disagreement}});
  const char* id36 = r.identity == QuantReport::Identity36::Holds ? "holds"
                     : r.identity == QuantReport::Identity36::NotDivisible
                         ? "not-divisible"
                         : "mismatch";
  return json{{"word", r.word},
              {"ledger", ledger},
              {"enveloping_ok", r.enveloping_ok},
              {"identity36", id36},
              {"identity_detail", r.identity_detail},
              {"findings", r.findings}};
}

void emit(bool as_json, const std::string& command, const json& inputs,
          const json& result, const std::string& text,
          const json& findings = json::array()) {
  if (as_json) {
    json out{{"command", command}, {"inputs", inputs}, {"result", result},
             {"findings", findings}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
}

struct CommonOpts {
  std::string quiver_path;
  bool as_json = false;
  std::string exponent_policy = "alt";
  std::string sign_policy = "components";

  HopfOptions hopf() const {
    HopfOptions o;
    o.exponent = parse_exponent_policy(exponent_policy);
    o.sign = parse_sign_policy(sign_policy);
    return o;
  }
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("-q,--quiver", c.quiver_path, "quiver file")->required();
  cmd->add_flag("--json", c.as_json, "emit JSON");
  cmd->add_option("--exponent-policy", c.exponent_policy,
                  "coproduct h-exponent policy (paper|alt)");
  cmd->add_option("--sign-policy", c.sign_policy,
                  "direct antipode sign (components|arrows)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"necklace Lie bialgebra and Hopf quantization toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  // bracket
  CommonOpts br_c;
  std::vector<std::string> br_exprs;
  auto* br = app.add_subcommand("bracket", "Lie bracket of two elements");
  add_common(br, br_c);
  br->add_option("exprs", br_exprs, "two Lie expressions")->expected(2);
  br->callback([&] {
    Quiver q = load_quiver_file(br_c.quiver_path);
    LieElement x = parse_lie(q, br_exprs[0]);
    LieElement y = parse_lie(q, br_exprs[1]);
    LieElement b = bracket(q, x, y);
    emit(br_c.as_json, "bracket", json{{"x", br_exprs[0]}, {"y", br_exprs[1]}},
         lie_json(q, b), b.str(q));
  });

  // cobracket
  CommonOpts co_c;
  std::string co_expr;
  auto* co = app.add_subcommand("cobracket", "Lie cobracket of an element");
  add_common(co, co_c);
  co->add_option("expr", co_expr, "Lie expression")->required();
  co->callback([&] {
    Quiver q = load_quiver_file(co_c.quiver_path);
    LieTensor t = cobracket(q, parse_lie(q, co_expr));
    emit(co_c.as_json, "cobracket", json{{"x", co_expr}}, lie_tensor_json(q, t),
         t.str(q));
  });

  // reduce
  CommonOpts re_c;
  std::string re_expr;
  auto* re = app.add_subcommand("reduce", "PBW normal form of an algebra element");
  add_common(re, re_c);
  re->add_option("expr", re_expr, "algebra expression")->required();
  re->callback([&] {
    Quiver q = load_quiver_file(re_c.quiver_path);
    Rewriter rw(q);
    AlgebraElement r = rw.reduce(parse_algebra(q, re_expr));
    emit(re_c.as_json, "reduce", json{{"x", re_expr}}, algebra_json(q, r), r.str(q));
  });

  // coproduct
  CommonOpts cp_c;
  std::string cp_expr;
  int cp_n = 2;
  auto* cp = app.add_subcommand("coproduct", "(n-1)-fold coproduct");
  add_common(cp, cp_c);
  cp->add_option("-n", cp_n, "number of tensor factors (>= 2)");
  cp->add_option("expr", cp_expr, "algebra expression")->required();
  cp->callback([&] {
    Quiver q = load_quiver_file(cp_c.quiver_path);
    HopfCtx ctx(q, cp_c.hopf());
    TensorElement t = coproduct(ctx, parse_algebra(q, cp_expr), cp_n);
    emit(cp_c.as_json, "coproduct", json{{"x", cp_expr}, {"n", cp_n}},
         tensor_json(q, t), t.str(q));
  });

  // antipode
  CommonOpts an_c;
  std::string an_expr;
  std::string an_method = "direct";
  auto* an = app.add_subcommand("antipode", "antipode in PBW normal form");
  add_common(an, an_c);
  an->add_option("--method", an_method, "direct|series");
  an->add_option("expr", an_expr, "algebra expression")->required();
  an->callback([&] {
    Quiver q = load_quiver_file(an_c.quiver_path);
    HopfCtx ctx(q, an_c.hopf());
    AntipodeMethod m;
    if (an_method == "direct")
      m = AntipodeMethod::Direct;
    else if (an_method == "series")
      m = AntipodeMethod::Series;
    else
      throw Error(ErrorKind::Usage, "unknown method '" + an_method + "'");
    AlgebraElement r = antipode(ctx, parse_algebra(q, an_expr), m);
    emit(an_c.as_json, "antipode", json{{"x", an_expr}, {"method", an_method}},
         algebra_json(q, r), r.str(q));
  });

  // counit
  CommonOpts cu_c;
  std::string cu_expr;
  auto* cu = app.add_subcommand("counit", "counit of an algebra element");
  add_common(cu, cu_c);
  cu->add_option("expr", cu_expr, "algebra expression")->required();
  cu->callback([&] {
    Quiver q = load_quiver_file(cu_c.quiver_path);
    HPoly e = counit(parse_algebra(q, cu_expr));
    emit(cu_c.as_json, "counit", json{{"x", cu_expr}}, hpoly_json(e), e.str());
  });

  // rep
  CommonOpts rp_c;
  std::string rp_expr;
  std::string rp_dims;
  auto* rp = app.add_subcommand("rep", "differential-operator representation (h = 1)");
  add_common(rp, rp_c);
  rp->add_option("-d,--dims", rp_dims, "dimension vector, e.g. v=2,u=1")->required();
  rp->add_option("expr", rp_expr, "algebra expression")->required();
  rp->callback([&] {
    Quiver q = load_quiver_file(rp_c.quiver_path);
    DimVector d = parse_dim_vector(q, rp_dims);
    WeylElement w = rho(q, parse_algebra(q, rp_expr), d);
    emit(rp_c.as_json, "rep", json{{"x", rp_expr}, {"d", rp_dims}}, weyl_json(q, w),
         w.str(q));
  });

  // verify
  CommonOpts vf_c;
  std::string vf_suite = "all";
  std::string vf_dims;
  int vf_samples = 100;
  int vf_max_len = 6;
  int vf_max_arrows = 4;
  unsigned long long vf_seed = 12345;
  auto* vf = app.add_subcommand("verify", "run a seeded verification suite");
  add_common(vf, vf_c);
  vf->add_option("--suite", vf_suite, "lie|hopf|rep|all");
  vf->add_option("--samples", vf_samples, "sample count");
  vf->add_option("--max-len", vf_max_len, "max cyclic-word length (lie suite)");
  vf->add_option("--max-arrows", vf_max_arrows, "max arrows per link (hopf/rep)");
  vf->add_option("--seed", vf_seed, "RNG seed");
  vf->add_option("-d,--dims", vf_dims, "dimension vector (rep suite)");
  vf->callback([&] {
    Quiver q = load_quiver_file(vf_c.quiver_path);
    std::vector<Report> reports;
    if (vf_suite == "lie" || vf_suite == "all")
      reports.push_back(verify_lie(q, vf_samples, vf_max_len, vf_seed));
    if (vf_suite == "hopf" || vf_suite == "all")
      reports.push_back(verify_hopf(q, vf_samples, vf_max_arrows, vf_seed, vf_c.hopf()));
    if (vf_suite == "rep" || vf_suite == "all") {
      DimVector d = vf_dims.empty()
                        ? DimVector::make(q, std::vector<int>(q.num_vertices(), 1))
                        : parse_dim_vector(q, vf_dims);
      reports.push_back(verify_rep(q, d, vf_samples, vf_seed));
    }
    if (reports.empty())
      throw Error(ErrorKind::Usage, "unknown suite '" + vf_suite + "'");
    bool all_pass = true;
    std::string text;
    json jr = json::array();
    for (const auto& r : reports) {
      all_pass = all_pass && r.pass();
      text += r.str();
      jr.push_back(report_json(r));
    }
    emit(vf_c.as_json, "verify",
         json{{"suite", vf_suite},
              {"samples", vf_samples},
              {"seed", vf_seed},
              {"max_len", vf_max_len},
              {"max_arrows", vf_max_arrows}},
         jr, text.empty() ? "" : text.substr(0, text.size() - 1));
    if (!all_pass) exit_code = 1;
  });

  // quantize
  CommonOpts qz_c;
  std::string qz_word;
  int qz_max_len = 0;
  auto* qz = app.add_subcommand("quantize",
                                "quantization diagnostic for cyclic words");
  add_common(qz, qz_c);
  qz->add_option("word", qz_word, "a cyc(...) expression");
  qz->add_option("--max-len", qz_max_len,
                 "run on every cyclic word up to this length instead");
  qz->callback([&] {
    Quiver q = load_quiver_file(qz_c.quiver_path);
    HopfCtx ctx(q, qz_c.hopf());
    std::vector<CyclicWord> words;
    if (qz_max_len > 0) {
      for (int len = 1; len <= qz_max_len; ++len)
        for (const auto& w : enumerate_words(q, len)) words.push_back(w);
    } else {
      if (qz_word.empty())
        throw Error(ErrorKind::Usage, "provide a word or --max-len");
      LieElement x = parse_lie(q, qz_word);
      if (x.terms().size() != 1 || x.terms().begin()->first.is_idem() ||
          x.terms().begin()->second != 1)
        throw Error(ErrorKind::Usage, "quantize expects a single cyclic word");
      words.push_back(x.terms().begin()->first.word());
    }
    std::string text;
    json jr = json::array();
    json findings = json::array();
    for (const auto& w : words) {
      QuantReport r = quantization_diagnostic(ctx, w);
      text += r.str();
      jr.push_back(quant_json(r));
      for (const auto& f : r.findings) findings.push_back(r.word + ": " + f);
    }
    emit(qz_c.as_json, "quantize",
         json{{"word", qz_word}, {"max_len", qz_max_len}}, jr,
         text.empty() ? "" : text.substr(0, text.size() - 1), findings);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::Usage || e.kind() == ErrorKind::Parse ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
