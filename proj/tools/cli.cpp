#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

namespace aarf::cli {

namespace {

json int_list(const std::vector<Int>& v) { return json(v); }

std::vector<Int> parse_int_list(const std::string& s) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    long long value = std::stoll(item, &pos);
    if (pos != item.size()) throw InvalidArgument("bad integer '" + item + "'");
    out.push_back(static_cast<Int>(value));
  }
  if (out.empty()) throw InvalidArgument("empty integer list");
  return out;
}

// "lo:hi" or a single value.
std::pair<Int, Int> parse_range(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) {
    Int v = static_cast<Int>(std::stoll(s));
    return {v, v};
  }
  return {static_cast<Int>(std::stoll(s.substr(0, colon))),
          static_cast<Int>(std::stoll(s.substr(colon + 1)))};
}

}  // namespace

json binomial_json(const Binomial& b) {
  return json{{"plus", int_list(b.plus)}, {"minus", int_list(b.minus)}, {"degree", b.degree}};
}

json matrix_json(const RFMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.rows) rows.push_back(int_list(row));
  const char* source = m.source == RFSource::ClosedForm ? "closed-form"
                       : m.source == RFSource::Enumerated ? "enumerated"
                                                          : "external";
  return json{{"f", m.f}, {"rows", rows}, {"source", source}, {"tag", m.tag}};
}

json apery_payload(const std::vector<Int>& gens, Int mod) {
  NumericalSemigroup H(gens);
  AperySet ap = H.apery_set(mod);
  return json{{"generators", int_list(H.generators())},
              {"modulus", ap.modulus},
              {"elements", int_list(ap.elements)}};
}

json pf_payload(const std::vector<Int>& gens) {
  NumericalSemigroup H(gens);
  return json{{"generators", int_list(H.generators())},
              {"pseudo_frobenius", int_list(H.pseudo_frobenius())},
              {"frobenius", H.frobenius_number()},
              {"type", H.type()},
              {"symmetric", H.is_symmetric()}};
}

json structure_payload(const AAPresentation& pres) {
  StructureConstants sc = structure_constants(pres);
  json out{{"u", sc.u},       {"v", sc.v},
           {"z", sc.z},       {"w", sc.w},
           {"lambda", sc.lambda}, {"mu", sc.mu},
           {"nu", sc.nu},     {"q", sc.q},
           {"r", sc.r},       {"q_prime", sc.q_prime},
           {"r_prime", sc.r_prime}, {"epsilon", sc.epsilon}};
  if (sc.w_empty()) {
    out["W"] = json{{"empty", true}};
  } else {
    out["W"] = json{{"empty", false},
                    {"t_range", json::array({sc.u - sc.z, sc.u - 1})},
                    {"b_range", json::array({sc.v - sc.w, sc.v - 1})}};
  }
  json cands = json::array();
  for (const auto& c : pf_candidates(pres, sc))
    cands.push_back(json{{"family", std::string(1, c.family)},
                         {"index", c.index},
                         {"value", c.value},
                         {"confirmed", c.confirmed}});
  out["candidates"] = cands;
  out["pseudo_frobenius"] = int_list(pres.semigroup().pseudo_frobenius());
  out["symmetric_case"] = to_string(classify_symmetric(pres, sc));
  return out;
}

json rf_payload(const AAPresentation& pres, Int f, const std::string& mode,
                std::optional<Int> limit) {
  json out{{"f", f}, {"mode", mode}};
  if (mode == "closed") {
    StructureConstants sc = structure_constants(pres);
    json ms = json::array();
    for (const auto& m : rf_closed_form(pres, sc, f)) ms.push_back(matrix_json(m));
    out["matrices"] = ms;
  } else if (mode == "count") {
    out["count"] = rf_count(pres, f);
  } else if (mode == "enumerate") {
    out["count"] = rf_count(pres, f);
    json ms = json::array();
    for (const auto& m : rf_enumerate(pres, f, limit)) ms.push_back(matrix_json(m));
    out["matrices"] = ms;
    if (limit) out["limit"] = *limit;
  } else {
    throw InvalidArgument("mode must be closed, enumerate or count");
  }
  return out;
}

json relations_payload(const AAPresentation& pres, Int f) {
  RFRelationSet rs = all_rf_relations(pres, f);
  json rels = json::array();
  for (std::size_t i = 0; i < rs.relations.size(); ++i) {
    json r = binomial_json(rs.relations[i]);
    r["rows"] = json::array({rs.provenance[i].row_i, rs.provenance[i].row_j});
    rels.push_back(r);
  }
  return json{{"f", f}, {"relations", rels}, {"count", static_cast<Int>(rs.relations.size())}};
}

json ideal_payload(const std::vector<Int>& gens) {
  NumericalSemigroup H(gens);
  MinimalPresentation mp = minimal_generating_set(H);
  json out{{"generators", int_list(H.generators())},
           {"mu", mp.count},
           {"betti_degrees", int_list(mp.betti_degrees)}};
  json bs = json::array();
  for (const auto& b : mp.generators) bs.push_back(binomial_json(b));
  out["ideal_generators"] = bs;
  return out;
}

json verify_payload(const AAPresentation& pres) {
  StructureConstants sc = structure_constants(pres);
  TheoremVerdict v = is_minimally_generated_by_rf_relations(pres);
  MinimalPresentation mp = minimal_generating_set(pres.semigroup(), pres.columns());
  json witness = json::object();
  for (const auto& [deg, rels] : v.witness) {
    json arr = json::array();
    for (const auto& b : rels) arr.push_back(binomial_json(b));
    witness[std::to_string(deg)] = arr;
  }
  return json{{"holds", v.holds},
              {"symmetric", pres.semigroup().is_symmetric()},
              {"symmetric_case", to_string(classify_symmetric(pres, sc))},
              {"pseudo_frobenius", int_list(pres.semigroup().pseudo_frobenius())},
              {"mu", mp.count},
              {"witness", witness},
              {"deficiency", int_list(v.deficiency)}};
}

json sweep_record_json(const SweepRecord& rec) {
  return json{{"m0", rec.m0},
              {"d", rec.d},
              {"p", rec.p},
              {"n", rec.n},
              {"case", to_string(rec.tag)},
              {"symmetric", rec.symmetric},
              {"holds", rec.holds},
              {"mu", rec.mu},
              {"pf", int_list(rec.pf)},
              {"deficiency", int_list(rec.deficiency)}};
}

json command_result(const std::string& command, json input, json output) {
  return json{{"command", command},
              {"input", std::move(input)},
              {"output", std::move(output)},
              {"status", "ok"}};
}

json error_result(const std::string& command, json input, const std::string& message, int code) {
  return json{{"command", command},
              {"input", std::move(input)},
              {"status", "error"},
              {"error", json{{"code", code}, {"message", message}}}};
}

std::string monomial(const std::vector<Int>& exponents) {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(i);
    if (exponents[i] != 1) out += "^" + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

std::string binomial_text(const json& b) {
  std::vector<Int> plus = b.at("plus").get<std::vector<Int>>();
  std::vector<Int> minus = b.at("minus").get<std::vector<Int>>();
  return monomial(plus) + " - " + monomial(minus);
}

void matrix_text(std::ostream& os, const json& m) {
  for (const auto& row : m.at("rows")) {
    os << "  [";
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i].get<Int>();
    os << "]\n";
  }
}

}  // namespace

std::string render_table(const json& result) {
  std::ostringstream os;
  const std::string cmd = result.at("command").get<std::string>();
  if (result.at("status") != "ok") {
    const auto& err = result.at("error");
    os << cmd << ": error " << err.at("code").get<int>() << ": "
       << err.at("message").get<std::string>() << "\n";
    return os.str();
  }
  const json& out = result.at("output");
  if (cmd == "apery") {
    os << "Ap(H, " << out.at("modulus").get<Int>() << ") =";
    for (const auto& e : out.at("elements")) os << " " << e.get<Int>();
    os << "\n";
  } else if (cmd == "pf") {
    os << "PF(H) =";
    for (const auto& e : out.at("pseudo_frobenius")) os << " " << e.get<Int>();
    os << "\ntype = " << out.at("type").get<Int>()
       << ", frobenius = " << out.at("frobenius").get<Int>()
       << ", symmetric = " << (out.at("symmetric").get<bool>() ? "yes" : "no") << "\n";
  } else if (cmd == "structure") {
    for (const char* k : {"u", "v", "z", "w", "lambda", "mu", "nu", "q", "r"})
      os << k << "=" << out.at(k).get<Int>() << " ";
    os << "q'=" << out.at("q_prime").get<Int>() << " r'=" << out.at("r_prime").get<Int>()
       << " epsilon=" << out.at("epsilon").get<Int>()
       << " W=" << (out.at("W").at("empty").get<bool>() ? "empty" : "nonempty") << "\n";
    os << "case: " << out.at("symmetric_case").get<std::string>() << "\n";
    for (const auto& c : out.at("candidates"))
      os << "  " << c.at("family").get<std::string>() << "_" << c.at("index").get<Int>() << " = "
         << c.at("value").get<Int>() << (c.at("confirmed").get<bool>() ? "  (in PF)" : "") << "\n";
  } else if (cmd == "rf") {
    if (out.contains("count")) os << "count = " << out.at("count").get<Int>() << "\n";
    if (out.contains("matrices"))
      for (const auto& m : out.at("matrices")) {
        os << "RF(" << m.at("f").get<Int>() << ")";
        if (!m.at("tag").get<std::string>().empty()) os << " [" << m.at("tag").get<std::string>() << "]";
        os << "\n";
        matrix_text(os, m);
      }
  } else if (cmd == "relations") {
    for (const auto& r : out.at("relations"))
      os << "  " << binomial_text(r) << "   (degree " << r.at("degree").get<Int>() << ")\n";
    os << out.at("count").get<Int>() << " relation(s)\n";
  } else if (cmd == "ideal") {
    os << "mu(I(H)) = " << out.at("mu").get<Int>() << "\n";
    for (const auto& b : out.at("ideal_generators"))
      os << "  " << binomial_text(b) << "   (degree " << b.at("degree").get<Int>() << ")\n";
  } else if (cmd == "verify") {
    os << "holds = " << (out.at("holds").get<bool>() ? "true" : "false")
       << ", case: " << out.at("symmetric_case").get<std::string>()
       << ", mu = " << out.at("mu").get<Int>() << "\n";
    for (const auto& [deg, rels] : out.at("witness").items()) {
      os << "  degree " << deg << ":\n";
      for (const auto& b : rels) os << "    " << binomial_text(b) << "\n";
    }
    if (!out.at("deficiency").empty()) {
      os << "  deficiency:";
      for (const auto& d : out.at("deficiency")) os << " " << d.get<Int>();
      os << "\n";
    }
  } else {
    os << result.dump(2) << "\n";
  }
  return os.str();
}

namespace {

struct CommonOpts {
  std::string format = "table";
  std::string out_path;
  int jobs = 1;
};

void add_common(CLI::App* sub, CommonOpts& opts) {
  sub->add_option("--format", opts.format, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
  sub->add_option("--out", opts.out_path, "write the result to a file instead of stdout");
}

int emit(const json& result, const CommonOpts& opts) {
  std::string text =
      opts.format == "json" ? result.dump(2) + "\n" : render_table(result);
  if (!opts.out_path.empty()) {
    std::ofstream f(opts.out_path, std::ios::binary);
    f << text;
  } else {
    std::cout << text;
  }
  if (result.at("status") == "ok") return 0;
  return result.at("error").at("code").get<int>();
}

int guarded(const std::string& cmd, const json& input, const CommonOpts& opts,
            const std::function<json()>& fn) {
  try {
    return emit(command_result(cmd, input, fn()), opts);
  } catch (const Error& e) {
    return emit(error_result(cmd, input, e.what(), e.internal() ? 3 : 2), opts);
  } catch (const std::exception& e) {
    return emit(error_result(cmd, input, e.what(), 2), opts);
  }
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"numerical semigroups of almost arithmetic sequences: "
               "pseudo-Frobenius elements, RF matrices, toric ideals"};
  app.require_subcommand(1);
  CommonOpts opts;

  // apery
  auto* apery = app.add_subcommand("apery", "Apery set of a numerical semigroup");
  std::string apery_gens;
  Int apery_mod = 0;
  apery->add_option("--gens", apery_gens, "comma-separated generators")->required();
  apery->add_option("--mod", apery_mod, "nonzero element to take the Apery set of")->required();
  add_common(apery, opts);

  // pf
  auto* pf = app.add_subcommand("pf", "pseudo-Frobenius numbers, type, symmetry");
  std::string pf_gens;
  pf->add_option("--gens", pf_gens, "comma-separated generators")->required();
  add_common(pf, opts);

  // presentation-based commands
  struct PresArgs {
    Int m0 = 0, d = 0, p = 0, n = 0;
  };
  auto add_pres = [](CLI::App* sub, PresArgs& a) {
    sub->add_option("--m0", a.m0, "first generator of the arithmetic part")->required();
    sub->add_option("--d", a.d, "common difference")->required();
    sub->add_option("--p", a.p, "number of arithmetic steps (embedding dimension p+2)")->required();
    sub->add_option("--n", a.n, "the extra generator")->required();
  };

  auto* structure = app.add_subcommand("structure", "structure constants of a presentation");
  PresArgs st_args;
  add_pres(structure, st_args);
  add_common(structure, opts);

  auto* rf = app.add_subcommand("rf", "RF matrices of a pseudo-Frobenius element");
  PresArgs rf_args;
  Int rf_f = 0;
  std::string rf_mode = "closed";
  Int rf_limit = -1;
  add_pres(rf, rf_args);
  rf->add_option("--f", rf_f, "pseudo-Frobenius element")->required();
  rf->add_option("--mode", rf_mode, "closed, enumerate or count")
      ->check(CLI::IsMember({"closed", "enumerate", "count"}));
  rf->add_option("--limit", rf_limit, "stop enumeration after this many matrices");
  add_common(rf, opts);

  auto* relations = app.add_subcommand("relations", "all RF-relations of an element");
  PresArgs rel_args;
  Int rel_f = 0;
  add_pres(relations, rel_args);
  relations->add_option("--f", rel_f, "pseudo-Frobenius element")->required();
  add_common(relations, opts);

  auto* ideal = app.add_subcommand("ideal", "minimal generating set of the defining ideal");
  std::string ideal_gens;
  ideal->add_option("--gens", ideal_gens, "comma-separated generators")->required();
  add_common(ideal, opts);

  auto* verify = app.add_subcommand(
      "verify", "check that the defining ideal is minimally generated by RF-relations");
  std::string v_m0, v_d, v_p, v_n;
  bool v_sweep = false;
  verify->add_option("--m0", v_m0, "m0 or range lo:hi")->required();
  verify->add_option("--d", v_d, "d or range lo:hi")->required();
  verify->add_option("--p", v_p, "p or range lo:hi")->required();
  verify->add_option("--n", v_n, "n, range lo:hi, or 'auto' for [m0+1, 3*m0]")->required();
  verify->add_flag("--sweep", v_sweep, "treat the parameters as a box and sweep it");
  verify->add_option("--jobs", opts.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);
  add_common(verify, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (apery->parsed()) {
    json input{{"gens", apery_gens}, {"mod", apery_mod}};
    return guarded("apery", input, opts,
                   [&] { return apery_payload(parse_int_list(apery_gens), apery_mod); });
  }
  if (pf->parsed()) {
    json input{{"gens", pf_gens}};
    return guarded("pf", input, opts, [&] { return pf_payload(parse_int_list(pf_gens)); });
  }
  if (structure->parsed()) {
    json input{{"m0", st_args.m0}, {"d", st_args.d}, {"p", st_args.p}, {"n", st_args.n}};
    return guarded("structure", input, opts, [&] {
      return structure_payload(AAPresentation(st_args.m0, st_args.d, st_args.p, st_args.n));
    });
  }
  if (rf->parsed()) {
    json input{{"m0", rf_args.m0}, {"d", rf_args.d}, {"p", rf_args.p},
               {"n", rf_args.n},   {"f", rf_f},      {"mode", rf_mode}};
    return guarded("rf", input, opts, [&] {
      AAPresentation pres(rf_args.m0, rf_args.d, rf_args.p, rf_args.n);
      std::optional<Int> limit;
      if (rf_limit >= 0) limit = rf_limit;
      return rf_payload(pres, rf_f, rf_mode, limit);
    });
  }
  if (relations->parsed()) {
    json input{{"m0", rel_args.m0}, {"d", rel_args.d}, {"p", rel_args.p},
               {"n", rel_args.n},   {"f", rel_f}};
    return guarded("relations", input, opts, [&] {
      return relations_payload(AAPresentation(rel_args.m0, rel_args.d, rel_args.p, rel_args.n),
                               rel_f);
    });
  }
  if (ideal->parsed()) {
    json input{{"gens", ideal_gens}};
    return guarded("ideal", input, opts, [&] { return ideal_payload(parse_int_list(ideal_gens)); });
  }
  if (verify->parsed()) {
    json input{{"m0", v_m0}, {"d", v_d}, {"p", v_p}, {"n", v_n}, {"sweep", v_sweep}};
    if (!v_sweep) {
      return guarded("verify", input, opts, [&] {
        return verify_payload(AAPresentation(parse_range(v_m0).first, parse_range(v_d).first,
                                             parse_range(v_p).first, parse_range(v_n).first));
      });
    }
    try {
      SweepBox box;
      std::tie(box.m0_lo, box.m0_hi) = parse_range(v_m0);
      std::tie(box.d_lo, box.d_hi) = parse_range(v_d);
      std::tie(box.p_lo, box.p_hi) = parse_range(v_p);
      if (v_n == "auto")
        box.n_auto = true;
      else
        std::tie(box.n_lo, box.n_hi) = parse_range(v_n);
      // JSON-lines, one presentation per line, streamed in parameter order;
      // summary envelope afterwards.
      std::ostream* lines = &std::cout;
      std::ofstream file;
      if (!opts.out_path.empty()) {
        file.open(opts.out_path, std::ios::binary);
        lines = &file;
      }
      Int emitted = 0;
      SweepReport report =
          verify_symmetric_sweep(box, opts.jobs, false, [&](const SweepRecord& rec) {
            *lines << sweep_record_json(rec).dump() << "\n";
            lines->flush();
            if (++emitted % 200 == 0)
              std::cerr << "verify: " << emitted << " record(s) written\n";
          });
      json summary{{"scanned", report.scanned},
                   {"valid", report.valid},
                   {"symmetric", report.symmetric},
                   {"counterexamples", static_cast<Int>(report.counterexamples.size())}};
      json result = command_result("verify", input, summary);
      if (opts.format == "json")
        std::cout << result.dump(2) << "\n";
      else
        std::cout << "sweep: " << report.symmetric << " symmetric instance(s), "
                  << report.counterexamples.size() << " counterexample(s)\n";
      return 0;  // the sweep itself succeeded; counterexamples are data
    } catch (const Error& e) {
      return emit(error_result("verify", input, e.what(), e.internal() ? 3 : 2), opts);
    }
  }
  return 2;
}

}  // namespace aarf::cli
