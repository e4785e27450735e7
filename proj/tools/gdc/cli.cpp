#include "cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gdc/errors.hpp"
#include "ideal_file.hpp"

namespace gdc::cli {

using nlohmann::json;

namespace {

const std::vector<std::string> kCommands{"gb",        "lt",         "initial",        "homogenize", "minprimes",
                                         "cdim",      "cm-check",   "weight-for",     "gin",        "verify-martina",
                                         "verify-ks", "verify-skinner", "reproduce-paper"};

std::vector<std::string> strings(const std::vector<Polynomial>& ps, const MonomialOrder& order) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(format_polynomial(p, order));
  return out;
}

std::vector<std::string> prime_strings(const std::vector<VariablePrime>& ps, const Ring& ring) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string(*ring));
  return out;
}

IdealFile single_file(const RunConfig& c) {
  if (c.files.size() != 1) throw InvalidInput("'" + c.command + "' expects exactly one ideal file");
  return load_ideal_file(c.files.front());
}

MonomialOrder order_of(const RunConfig& c, const Ring& ring) {
  auto order = MonomialOrder::parse(c.order);
  order.validate(ring->size());
  return order;
}

/// The weight from --weight or --weight-for, which must be strictly positive.
WeightVector weight_of(const RunConfig& c, const IdealFile& f, json& doc) {
  if (c.weight && c.weight_for) throw InvalidInput("give either --weight or --weight-for, not both");
  if (c.weight) {
    auto w = WeightVector::parse(*c.weight);
    if (w.size() != f.ring->size()) throw DimensionMismatch("weight length does not match the number of variables");
    w.require_strictly_positive();
    return w;
  }
  if (c.weight_for) {
    auto order = MonomialOrder::parse(*c.weight_for);
    order.validate(f.ring->size());
    auto w = weight_for_order(f.ideal, order);
    doc["weight_for"] = order.to_string();
    return w;
  }
  throw InvalidInput("'" + c.command + "' needs --weight or --weight-for");
}

/// Weight for commands that accept zero entries.
WeightVector natural_weight(const RunConfig& c, const IdealFile& f, json& doc) {
  if (c.weight && !c.weight_for) {
    auto w = WeightVector::parse(*c.weight);
    if (w.size() != f.ring->size()) throw DimensionMismatch("weight length does not match the number of variables");
    return w;
  }
  return weight_of(c, f, doc);
}

struct Resolved {
  ComponentSet set;
  std::string source;
  std::vector<std::string> caveats;
};

/// Components of the input ideal: supplied file, monomial decomposition,
/// certified variable primes, or the ideal itself taken as prime.
Resolved resolve_components(const RunConfig& c, const IdealFile& f) {
  if (f.ideal.is_unit()) throw InvalidInput("the ideal is the unit ideal and has no components");
  if (c.component) {
    auto set = load_component_file(*c.component, f.ring);
    try {
      set.verify_against(f.ideal);
    } catch (const InvalidInput& e) {
      throw InvalidInput(std::string("component file refused: ") + e.what());
    }
    std::vector<std::string> caveats;
    if (set.has_trusted()) caveats.push_back("primes trusted: primality of the supplied components is not checked");
    return {std::move(set), "supplied", std::move(caveats)};
  }
  if (f.ideal.is_monomial()) {
    const auto b = MonomialIdeal::from_polynomials(f.ring, f.ideal.generators());
    return {ComponentSet::from_variable_primes(f.ring, minimal_primes_monomial(b)), "monomial", {}};
  }
  if (!c.prime)
    if (auto set = certify_variable_components(f.ideal)) return {std::move(*set), "certified", {}};
  std::vector<std::string> caveats{c.prime ? "primes trusted: the input ideal is declared prime"
                                           : "primes trusted: no component information given, the input ideal is "
                                             "assumed prime (use --component or --prime)"};
  return {ComponentSet::from_trusted_primes(f.ring, {f.ideal}), "trusted-prime", std::move(caveats)};
}

json partition_json(const ConnectivityReport& rep, const ComponentSet& set) {
  if (!rep.partition) return nullptr;
  json a = json::array(), b = json::array();
  for (auto i : rep.partition->first) a.push_back(set[i].to_string(set.ring()));
  for (auto i : rep.partition->second) b.push_back(set[i].to_string(set.ring()));
  return json::array({a, b});
}

int record_exit(const VerificationRecord& r) { return r.pass ? kOk : kVerificationFailed; }

json cmd_gb(const RunConfig& c, int&) {
  const auto f = single_file(c);
  const auto order = order_of(c, f.ring);
  const auto& gb = f.ideal.basis(order);
  return {{"order", order.to_string()}, {"basis", strings(gb.elements(), order)}, {"size", gb.size()}};
}

json cmd_lt(const RunConfig& c, int&) {
  const auto f = single_file(c);
  const auto order = order_of(c, f.ring);
  const auto lt = lt_ideal(f.ideal, order);
  return {{"order", order.to_string()}, {"generators", strings(lt.to_polynomials(), order)}};
}

json cmd_initial(const RunConfig& c, int&) {
  const auto f = single_file(c);
  json doc;
  const auto w = natural_weight(c, f, doc);
  const auto in = initial_ideal_weight(f.ideal, w);
  doc["weight"] = w.to_string();
  doc["generators"] = strings(in.generators(), MonomialOrder::weight(w));
  doc["monomial"] = initial_ideal_is_monomial(f.ideal, w);
  return doc;
}

json cmd_homogenize(const RunConfig& c, int&) {
  const auto f = single_file(c);
  json doc;
  const auto w = natural_weight(c, f, doc);
  const auto h = omega_homogenize_ideal(f.ideal, w);
  doc["weight"] = w.to_string();
  doc["ring"] = h.ring()->names();
  doc["generators"] = strings(h.generators(), MonomialOrder::grevlex());
  return doc;
}

json cmd_minprimes(const RunConfig& c, int&) {
  const auto f = single_file(c);
  json doc;
  std::vector<std::string> names;
  std::vector<int> dims;
  if (f.ideal.is_unit()) throw InvalidInput("the unit ideal has no minimal primes");
  std::optional<ComponentSet> set;
  if (f.ideal.is_monomial()) {
    doc["source"] = "monomial";
    set = ComponentSet::from_variable_primes(
        f.ring, minimal_primes_monomial(MonomialIdeal::from_polynomials(f.ring, f.ideal.generators())));
  } else if ((set = certify_variable_components(f.ideal))) {
    doc["source"] = "certified";
  } else {
    const auto order = order_of(c, f.ring);
    doc["source"] = "leading-terms";
    doc["order"] = order.to_string();
    doc["leading_terms"] = lt_ideal(f.ideal, order).to_string();
    set = ComponentSet::from_variable_primes(f.ring, minimal_primes_monomial(lt_ideal(f.ideal, order)));
  }
  int top = -1;
  for (const auto& comp : set->components()) {
    names.push_back(comp.to_string(f.ring));
    dims.push_back(comp.dim);
    top = std::max(top, comp.dim);
  }
  doc["primes"] = names;
  doc["dims"] = dims;
  doc["dimension"] = top;
  return doc;
}

json cmd_cdim(const RunConfig& c, int&) {
  const auto f = single_file(c);
  const auto r = resolve_components(c, f);
  const auto rep = connectivity_dimension(r.set, c.threads);
  json certs = json::array();
  for (const auto& cert : rep.certificates) certs.push_back(to_json(cert));
  json doc{{"source", r.source},   {"components", r.set.to_strings()},
           {"c", rep.c},           {"sdim", rep.sdim},
           {"dim", rep.dim},       {"partition", partition_json(rep, r.set)},
           {"certificates", certs}, {"caveats", r.caveats}};
  doc["projective"] = c.projective;
  if (c.projective) doc["c_projective"] = projective_connectivity(r.set);
  return doc;
}

json cmd_cm_check(const RunConfig& c, int&) {
  const auto f = single_file(c);
  json doc;
  MonomialIdeal b(f.ring, {});
  if (f.ideal.is_monomial()) {
    doc["source"] = "monomial";
    b = MonomialIdeal::from_polynomials(f.ring, f.ideal.generators());
  } else {
    const auto order = order_of(c, f.ring);
    doc["source"] = "leading-terms";
    doc["order"] = order.to_string();
    b = lt_ideal(f.ideal, order);
  }
  if (b.is_unit()) throw InvalidInput("the ideal is the unit ideal");
  const auto primes = minimal_primes_monomial(b);
  doc["monomial_ideal"] = b.to_string();
  doc["components"] = prime_strings(primes, f.ring);
  json ws = json::array();
  for (const auto& w : cm_obstruction(b)) {
    json a = json::array(), s = json::array();
    for (auto i : w.side_a) a.push_back(primes[i].to_string(*f.ring));
    for (auto i : w.side_b) s.push_back(primes[i].to_string(*f.ring));
    ws.push_back({{"localization", w.localization.to_string(*f.ring)},
                  {"side_a", a},
                  {"side_b", s},
                  {"local_c", w.local_c},
                  {"local_dim", w.local_dim}});
  }
  doc["obstructed"] = !ws.empty();
  doc["witnesses"] = ws;
  return doc;
}

json cmd_weight_for(const RunConfig& c, int&) {
  const auto f = single_file(c);
  const auto order = order_of(c, f.ring);
  return {{"order", order.to_string()}, {"weight", weight_for_order(f.ideal, order).to_string()}};
}

json cmd_gin(const RunConfig& c, int& exit_code) {
  const auto f = single_file(c);
  const auto order = order_of(c, f.ring);
  const auto s = generic_initial_sample(f.ideal, order, c.seed);
  if (!s.stable) exit_code = kVerificationFailed;
  return {{"order", order.to_string()},
          {"seed", c.seed},
          {"initial", s.initial.to_string()},
          {"radical", radical_monomial(s.initial).to_string()},
          {"stable", s.stable}};
}

json cmd_verify_martina(const RunConfig& c, int& exit_code) {
  const auto f = single_file(c);
  json extra;
  const auto w = weight_of(c, f, extra);
  const auto r = resolve_components(c, f);
  auto rec = check_martina(f.ideal, w, r.set, c.threads);
  if (!r.caveats.empty()) std::erase(rec.caveats, std::string("primes trusted"));
  for (const auto& cav : r.caveats)
    if (std::find(rec.caveats.begin(), rec.caveats.end(), cav) == rec.caveats.end()) rec.caveats.push_back(cav);
  rec.inputs["component_source"] = r.source;
  if (extra.contains("weight_for")) rec.inputs["weight_for"] = extra["weight_for"];
  exit_code = record_exit(rec);
  return rec.to_json();
}

json cmd_verify_ks(const RunConfig& c, int& exit_code) {
  const auto f = single_file(c);
  json extra;
  const auto w = weight_of(c, f, extra);
  auto rec = check_ks_corollary(f.ideal, w);
  if (extra.contains("weight_for")) rec.inputs["weight_for"] = extra["weight_for"];
  exit_code = record_exit(rec);
  return rec.to_json();
}

json cmd_verify_skinner(const RunConfig& c, int& exit_code) {
  const auto f = single_file(c);
  json extra;
  const auto w = weight_of(c, f, extra);
  auto rec = check_skinner(f.ideal, w);
  if (extra.contains("weight_for")) rec.inputs["weight_for"] = extra["weight_for"];
  exit_code = record_exit(rec);
  return rec.to_json();
}

json cmd_reproduce(const RunConfig& c, int& exit_code) {
  if (!c.files.empty()) throw InvalidInput("'reproduce-paper' takes no files; use --data-dir");
  const auto records = reproduce_paper(c.data_dir.empty() ? default_data_dir() : c.data_dir);
  json arr = json::array();
  for (const auto& r : records) {
    arr.push_back(r.to_json());
    if (!r.pass) exit_code = kVerificationFailed;
  }
  return arr;
}

std::string join(const json& arr, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? sep : "") + arr[i].get<std::string>();
  return s;
}

std::string render_record(const json& r) {
  std::ostringstream os;
  os << (r["pass"].get<bool>() ? "[pass] " : "[FAIL] ") << r["theorem"].get<std::string>() << "\n";
  for (const auto& [key, value] : r["inputs"].items())
    os << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  os << "  lhs = " << r["lhs"] << ", rhs = " << r["rhs"]
     << (r["strict_expected"].get<bool>() ? " (strict inequality expected)" : "") << "\n";
  for (const auto& cav : r["caveats"]) os << "  caveat: " << cav.get<std::string>() << "\n";
  return os.str();
}

}  // namespace

std::string default_data_dir() {
#ifdef GDC_DATA_DIR
  return GDC_DATA_DIR;
#else
  return "data";
#endif
}

json execute(const RunConfig& config, int& exit_code) {
  exit_code = kOk;
  if (config.budget) set_default_step_budget(*config.budget);
  json doc;
  const auto& cmd = config.command;
  if (cmd == "gb") doc = cmd_gb(config, exit_code);
  else if (cmd == "lt") doc = cmd_lt(config, exit_code);
  else if (cmd == "initial") doc = cmd_initial(config, exit_code);
  else if (cmd == "homogenize") doc = cmd_homogenize(config, exit_code);
  else if (cmd == "minprimes") doc = cmd_minprimes(config, exit_code);
  else if (cmd == "cdim") doc = cmd_cdim(config, exit_code);
  else if (cmd == "cm-check") doc = cmd_cm_check(config, exit_code);
  else if (cmd == "weight-for") doc = cmd_weight_for(config, exit_code);
  else if (cmd == "gin") doc = cmd_gin(config, exit_code);
  else if (cmd == "verify-martina") doc = cmd_verify_martina(config, exit_code);
  else if (cmd == "verify-ks") doc = cmd_verify_ks(config, exit_code);
  else if (cmd == "verify-skinner") doc = cmd_verify_skinner(config, exit_code);
  else if (cmd == "reproduce-paper") return cmd_reproduce(config, exit_code);
  else throw InvalidInput("unknown command '" + cmd + "'");
  json out{{"command", cmd}};
  if (config.files.size() == 1) out["file"] = config.files.front();
  out.update(doc);
  return out;
}

std::string render_text(const json& doc) {
  if (doc.is_array()) {
    std::string s;
    int failed = 0;
    for (const auto& r : doc) {
      s += render_record(r);
      failed += r["pass"].get<bool>() ? 0 : 1;
    }
    return s + std::to_string(doc.size() - failed) + "/" + std::to_string(doc.size()) + " checks passed\n";
  }
  if (doc.contains("theorem")) return render_record(doc);

  std::ostringstream os;
  const std::string cmd = doc["command"];
  if (cmd == "gb") {
    os << "reduced Groebner basis (" << doc["order"].get<std::string>() << "), " << doc["size"] << " elements\n";
    for (const auto& g : doc["basis"]) os << "  " << g.get<std::string>() << "\n";
  } else if (cmd == "lt") {
    os << "LT(I) under " << doc["order"].get<std::string>() << " = (" << join(doc["generators"], ", ") << ")\n";
  } else if (cmd == "initial") {
    os << "in_w(I) for w = " << doc["weight"].get<std::string>() << " = (" << join(doc["generators"], ", ") << ")\n"
       << "monomial: " << (doc["monomial"].get<bool>() ? "yes" : "no") << "\n";
  } else if (cmd == "homogenize") {
    os << "homogenized ideal for w = " << doc["weight"].get<std::string>() << " in " << join(doc["ring"], " ")
       << ":\n";
    for (const auto& g : doc["generators"]) os << "  " << g.get<std::string>() << "\n";
  } else if (cmd == "minprimes") {
    if (doc["source"] == "leading-terms")
      os << "minimal primes of LT(I) = " << doc["leading_terms"].get<std::string>() << " under "
         << doc["order"].get<std::string>() << ":\n";
    else
      os << "minimal primes (" << doc["source"].get<std::string>() << "):\n";
    for (std::size_t i = 0; i < doc["primes"].size(); ++i)
      os << "  " << doc["primes"][i].get<std::string>() << "  dim " << doc["dims"][i] << "\n";
    os << "dimension = " << doc["dimension"] << "\n";
  } else if (cmd == "cdim") {
    os << "components (" << doc["source"].get<std::string>() << "): " << join(doc["components"], ", ") << "\n";
    os << "c = " << doc["c"] << ", sdim = " << doc["sdim"] << ", dim = " << doc["dim"] << "\n";
    if (!doc["partition"].is_null())
      os << "split: {" << join(doc["partition"][0], ", ") << "} | {" << join(doc["partition"][1], ", ") << "}\n";
    if (doc["projective"].get<bool>()) os << "c(Z) = " << doc["c_projective"] << "\n";
    for (const auto& cav : doc["caveats"]) os << "caveat: " << cav.get<std::string>() << "\n";
  } else if (cmd == "cm-check") {
    os << "monomial ideal: " << doc["monomial_ideal"].get<std::string>() << "\n";
    os << "components: " << join(doc["components"], ", ") << "\n";
    if (doc["witnesses"].empty()) os << "no obstruction found\n";
    for (const auto& w : doc["witnesses"])
      os << "not Cohen-Macaulay: localized at " << w["localization"].get<std::string>() << ", c = " << w["local_c"]
         << " < dim - 1 = " << w["local_dim"].get<int>() - 1 << ", split {" << join(w["side_a"], ", ") << "} | {"
         << join(w["side_b"], ", ") << "}\n";
  } else if (cmd == "weight-for") {
    os << "weight for " << doc["order"].get<std::string>() << ": " << doc["weight"].get<std::string>() << "\n";
  } else if (cmd == "gin") {
    os << "initial ideal after a random change (" << doc["order"].get<std::string>() << ", seed " << doc["seed"]
       << "): " << doc["initial"].get<std::string>() << "\n"
       << "radical: " << doc["radical"].get<std::string>() << "\n"
       << "stable: " << (doc["stable"].get<bool>() ? "yes" : "no") << "\n";
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Groebner degenerations and connectivity dimension"};
  app.set_version_flag("--version", "gdc 0.1.0");
  app.add_option("command", config.command, "one of: " + [] {
                   std::string s;
                   for (const auto& c : kCommands) s += (s.empty() ? "" : ", ") + c;
                   return s;
                 }())
      ->required();
  app.add_option("files", config.files, "ideal file");
  app.add_option("--order", config.order, "monomial order: lex, grlex, grevlex, weight(w;tiebreak), block(k;a;b)");
  app.add_option("--weight", config.weight, "weight vector w1,w2,...");
  app.add_option("--weight-for", config.weight_for, "compute a weight representing this order");
  app.add_option("--seed", config.seed, "random seed");
  app.add_option("--budget", config.budget, "reduction step budget");
  app.add_flag("--json", config.json, "emit one JSON document");
  app.add_option("--threads", config.threads, "worker threads for edge weights")->check(CLI::Range(1u, 256u));
  app.add_flag("--prime", config.prime, "the input ideal is prime");
  app.add_option("--component", config.component, "file with the minimal primes, one per line");
  app.add_option("--data-dir", config.data_dir, "directory with the bundled example ideals");
  app.add_flag("--proj", config.projective, "also report the projective connectivity");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }
  if (std::find(kCommands.begin(), kCommands.end(), config.command) == kCommands.end()) {
    err << "error: unknown command '" << config.command << "'\n";
    if (config.json) out << json{{"error", "unknown command '" + config.command + "'"}}.dump(2) << "\n";
    return kInputError;
  }

  auto fail = [&](const std::string& kind, const std::string& message) {
    err << "error: " << message << "\n";
    if (config.json) out << json{{"error", message}, {"kind", kind}}.dump(2) << "\n";
    return kInputError;
  };
  try {
    int code = kOk;
    const json doc = execute(config, code);
    out << (config.json ? doc.dump(2) + "\n" : render_text(doc));
    return code;
  } catch (const ParseError& e) {
    return fail("parse", e.what());
  } catch (const BudgetExceeded& e) {
    return fail("budget", e.what());
  } catch (const InternalError& e) {
    return fail("internal", e.what());
  } catch (const Error& e) {
    return fail("input", e.what());
  }
}

}  // namespace gdc::cli
