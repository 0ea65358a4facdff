// Command-line front end: identity verification, family counts, Hilbert
// functions of the monomial quotients, and the arc-space initial-ideal lab.
//
// Exit codes: 0 on success, 1 on a mathematical divergence the invocation
// promised to hold, 2 on usage errors.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arcpart/arclab.hpp"
#include "arcpart/colored.hpp"
#include "arcpart/identities.hpp"
#include "arcpart/monomials.hpp"
#include "arcpart/version.hpp"

using json = nlohmann::ordered_json;
using namespace arcpart;

namespace {

struct Item {
  std::string name;
  json params;
  std::string status;  // pass | fail | info
  json data;
};

struct RunReport {
  std::string command;
  json params;
  std::vector<Item> items;

  bool failed() const {
    for (const auto& it : items)
      if (it.status == "fail") return true;
    return false;
  }
};

std::string overall_status(const RunReport& rep) { return rep.failed() ? "fail" : "pass"; }

void print_json(const RunReport& rep) {
  json out;
  out["version"] = kVersion;
  out["command"] = rep.command;
  out["params"] = rep.params;
  out["items"] = json::array();
  for (const auto& it : rep.items) {
    json j;
    j["name"] = it.name;
    j["params"] = it.params;
    j["status"] = it.status;
    j["data"] = it.data;
    out["items"].push_back(std::move(j));
  }
  out["status"] = overall_status(rep);
  std::cout << out.dump(2) << "\n";
}

std::string flatten(const json& j) {
  std::string s;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!s.empty()) s += " ";
    s += it.key() + "=";
    s += it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
  }
  return s;
}

void print_table(const RunReport& rep) {
  size_t wname = 4, wparams = 6;
  for (const auto& it : rep.items) {
    wname = std::max(wname, it.name.size());
    wparams = std::max(wparams, flatten(it.params).size());
  }
  std::cout << rep.command << " " << flatten(rep.params) << "\n";
  for (const auto& it : rep.items) {
    std::string p = flatten(it.params);
    std::cout << "  " << it.name << std::string(wname - it.name.size() + 2, ' ') << p
              << std::string(wparams - p.size() + 2, ' ') << it.status;
    std::string detail = flatten(it.data);
    if (!detail.empty()) std::cout << "  " << detail;
    std::cout << "\n";
  }
  std::cout << "status: " << overall_status(rep) << "\n";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_csv(const RunReport& rep) {
  // Union of per-item keys, first-seen order.
  std::vector<std::string> keys;
  auto note = [&](const json& j) {
    for (auto it = j.begin(); it != j.end(); ++it)
      if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
        keys.push_back(it.key());
  };
  for (const auto& it : rep.items) {
    note(it.params);
    note(it.data);
  }
  std::cout << "name,status";
  for (const auto& k : keys) std::cout << "," << csv_quote(k);
  std::cout << "\n";
  for (const auto& it : rep.items) {
    std::cout << csv_quote(it.name) << "," << it.status;
    for (const auto& k : keys) {
      std::cout << ",";
      const json* src = nullptr;
      if (it.params.contains(k)) src = &it.params;
      else if (it.data.contains(k)) src = &it.data;
      if (src) {
        const json& v = (*src)[k];
        std::cout << csv_quote(v.is_string() ? v.get<std::string>() : v.dump());
      }
    }
    std::cout << "\n";
  }
}

void emit(const RunReport& rep, const std::string& format) {
  if (format == "json") print_json(rep);
  else if (format == "csv") print_csv(rep);
  else print_table(rep);
}

std::optional<std::pair<int, int>> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return std::make_pair(v, v);
    }
    int lo = std::stoi(s.substr(0, dots));
    int hi = std::stoi(s.substr(dots + 2));
    if (lo < 0 || hi < lo) return std::nullopt;
    return std::make_pair(lo, hi);
  } catch (...) {
    return std::nullopt;
  }
}

std::optional<std::vector<int>> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (...) {
      return std::nullopt;
    }
  }
  if (out.empty()) return std::nullopt;
  return out;
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

// ---------------------------------------------------------------------------

int run_verify(const std::string& identity, int r, std::optional<int> i,
               std::optional<int> m, std::optional<int> k, std::optional<int> ell,
               int order, const std::string& format) {
  if (order < 0) return usage_error("--order must be >= 0");
  if (r < 2) return usage_error("--r must be >= 2");
  if (identity != "all" && !is_identity_name(identity))
    return usage_error("unknown identity '" + identity + "'");

  IdentityParams p;
  p.r = r;
  p.i = i;
  p.m = m;
  p.k = k;
  p.ell = ell;

  std::vector<IdentityReport> reps;
  try {
    reps = (identity == "all") ? verify_all_identities(p, order)
                               : verify_identity(identity, p, order);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }

  RunReport rep;
  rep.command = "verify";
  rep.params = {{"identity", identity}, {"r", r}, {"order", order}};
  for (const auto& ir : reps) {
    Item it;
    it.name = ir.name;
    for (const auto& [key, val] : ir.params) it.params[key] = val;
    it.params["order"] = ir.compare_order;
    it.status = ir.informational ? "info" : (ir.equal ? "pass" : "fail");
    it.data["equal"] = ir.equal;
    if (ir.divergence) {
      it.data["divergence_exponent"] = ir.divergence->exponent;
      it.data["lhs"] = ir.divergence->lhs.get_str();
      it.data["rhs"] = ir.divergence->rhs.get_str();
    }
    rep.items.push_back(std::move(it));
  }
  emit(rep, format);
  return rep.failed() ? 1 : 0;
}

int run_count(const std::string& set, const std::string& r_list, int i, int ell,
              const std::string& n_range, const std::string& format) {
  auto range = parse_range(n_range);
  if (!range) return usage_error("bad --n range '" + n_range + "'");
  auto [lo, hi] = *range;

  RunReport rep;
  rep.command = "count";
  rep.params = {{"set", set}, {"n", n_range}};

  if (set == "F") {
    auto rs = parse_int_list(r_list);
    if (!rs) return usage_error("bad --r list '" + r_list + "'");
    for (int r : *rs)
      if (r < 2) return usage_error("--r values must be >= 2");
    rep.params["r"] = r_list;
    for (int n = lo; n <= hi; ++n) {
      Item it;
      it.name = "F";
      it.params["n"] = n;
      bool equal = true;
      long first = 0;
      for (size_t ix = 0; ix < rs->size(); ++ix) {
        long c = count_F((*rs)[ix], n);
        it.data["r" + std::to_string((*rs)[ix])] = c;
        if (ix == 0) first = c;
        else equal &= (c == first);
      }
      it.data["equal"] = equal;
      it.status = equal ? "pass" : "fail";
      rep.items.push_back(std::move(it));
    }
  } else if (set == "B" || set == "A") {
    auto rs = parse_int_list(r_list);
    if (!rs || rs->size() != 1) return usage_error("--set " + set + " needs a single --r");
    int r = rs->front();
    if (r < 2 || i < 1 || i > r) return usage_error("need r >= 2 and 1 <= i <= r");
    rep.params["r"] = r;
    rep.params["i"] = i;
    for (int n = lo; n <= hi; ++n) {
      Item it;
      it.name = set;
      it.params["n"] = n;
      it.data["count"] = (set == "B") ? count_B(r, i, n) : count_A(r, i, n);
      it.status = "pass";
      rep.items.push_back(std::move(it));
    }
  } else if (set == "G") {
    auto rs = parse_int_list(r_list);
    if (!rs || rs->size() != 1) return usage_error("--set G needs a single --r");
    int r = rs->front();
    if (r < 2 || ell < 0) return usage_error("need r >= 2 and l >= 0");
    rep.params["r"] = r;
    rep.params["l"] = ell;
    for (int n = lo; n <= hi; ++n) {
      Item it;
      it.name = "G";
      it.params["n"] = n;
      it.data["count"] = count_G(r, ell, n);
      it.status = "pass";
      rep.items.push_back(std::move(it));
    }
  } else if (set == "colored") {
    for (int n = lo; n <= hi; ++n) {
      Item it;
      it.name = "colored";
      it.params["n"] = n;
      it.data["count"] = count_colored(n);
      it.status = "pass";
      rep.items.push_back(std::move(it));
    }
  } else if (set == "target") {
    for (int n = lo; n <= hi; ++n) {
      Item it;
      it.name = "target";
      it.params["n"] = n;
      auto tc = target_count(n);
      it.data["by_enumeration"] = tc.by_enumeration;
      it.data["by_series"] = tc.by_series.get_str();
      bool agree = (tc.by_series == tc.by_enumeration);
      it.data["agree"] = agree;
      it.status = agree ? "pass" : "fail";
      rep.items.push_back(std::move(it));
    }
  } else {
    return usage_error("unknown --set '" + set + "'");
  }
  emit(rep, format);
  return rep.failed() ? 1 : 0;
}

int run_hilbert(const std::string& ideal, int r, int ell, int order,
                const std::string& format) {
  if (r < 2) return usage_error("--r must be >= 2");
  if (order < 0) return usage_error("--order must be >= 0");

  RunReport rep;
  rep.command = "hilbert";
  rep.params = {{"ideal", ideal}, {"r", r}, {"order", order}};

  if (ideal == "Jr") {
    auto dims = hilbert_J(r, order);
    for (int n = 0; n <= order; ++n) {
      Item it;
      it.name = "Jr";
      it.params["n"] = n;
      long f = count_F(r, n);
      it.data["dim"] = dims[static_cast<size_t>(n)];
      it.data["count_F"] = f;
      bool agree = dims[static_cast<size_t>(n)] == f;
      it.data["agree"] = agree;
      it.status = agree ? "pass" : "fail";
      rep.items.push_back(std::move(it));
    }
  } else if (ideal == "Gl") {
    if (ell < 0) return usage_error("--l must be >= 0");
    rep.params["l"] = ell;
    auto dims = hilbert_Gl_quotient(r, ell, order);
    for (int n = 0; n <= order; ++n) {
      Item it;
      it.name = "Gl";
      it.params["n"] = n;
      long g = count_G(r, ell, n);
      it.data["dim"] = dims[static_cast<size_t>(n)];
      it.data["count_G"] = g;
      bool agree = dims[static_cast<size_t>(n)] == g;
      it.data["agree"] = agree;
      it.status = agree ? "pass" : "fail";
      rep.items.push_back(std::move(it));
    }
  } else {
    return usage_error("unknown --ideal '" + ideal + "' (expected Jr or Gl)");
  }
  emit(rep, format);
  return rep.failed() ? 1 : 0;
}

json arc_weight_data(const WeightReport& w, const Int& expected, bool with_leads) {
  json d;
  d["monomials"] = w.monomial_count;
  d["ideal_dim"] = w.ideal_dim;
  d["quotient_dim"] = w.quotient_dim;
  d["expected"] = expected.get_str();
  d["hilbert_ok"] = (expected == w.quotient_dim);
  if (w.agrees_with_J) {
    d["agrees_with_J"] = *w.agrees_with_J;
    if (!*w.agrees_with_J) {
      json a = json::array(), b = json::array();
      for (const auto& m : w.only_in_arc) a.push_back(m.str());
      for (const auto& m : w.only_in_J) b.push_back(m.str());
      d["only_in_arc"] = a;
      d["only_in_J"] = b;
    }
  }
  if (with_leads) {
    json leads = json::array();
    for (const auto& m : w.lead_monomials) leads.push_back(m.str());
    d["lead_monomials"] = leads;
  }
  return d;
}

int run_arcs(int r, int weight, const std::string& family_order,
             const std::string& index_dir, const std::string& tie_break, bool adapted,
             bool compare_j, bool sweep, bool force, const std::string& format) {
  if (r < 2) return usage_error("--r must be >= 2");
  if (weight < 0) return usage_error("--weight must be >= 0");
  if (weight > kArcWeightCap && !force)
    return usage_error("--weight " + std::to_string(weight) + " exceeds the cap " +
                       std::to_string(kArcWeightCap) + "; pass --force to override");
  auto order = parse_order(family_order, index_dir, tie_break);
  if (!order)
    return usage_error("bad order flags (family '" + family_order + "', index-dir '" +
                       index_dir + "', tie-break '" + tie_break + "')");

  auto expect = arc_quotient_target(weight);

  RunReport rep;
  rep.command = "arcs";
  rep.params = {{"r", r},
                {"weight", weight},
                {"mode", adapted ? "adapted" : "plain"}};

  if (sweep) {
    rep.params["sweep"] = true;
    for (const auto& ord : built_in_orders()) {
      auto irep = initial_ideal(r, weight, ord, adapted);
      compare_with_J(irep);
      Item it;
      it.name = "order";
      it.params["order"] = ord.name();
      bool hilbert_ok = true;
      std::string agreement;
      json divergent = json::array();
      for (const auto& w : irep.weights) {
        hilbert_ok &= (expect[static_cast<size_t>(w.weight)] == w.quotient_dim);
        bool agree = w.agrees_with_J.value_or(true);
        agreement += agree ? '+' : 'X';
        if (!agree) divergent.push_back(w.weight);
      }
      it.data["hilbert_ok"] = hilbert_ok;
      it.data["agreement"] = agreement;
      it.data["agrees_all"] = divergent.empty();
      if (!divergent.empty()) it.data["divergent_weights"] = divergent;
      it.status = hilbert_ok ? "pass" : "fail";
      rep.items.push_back(std::move(it));
    }
  } else {
    rep.params["order"] = order->name();
    auto irep = initial_ideal(r, weight, *order, adapted);
    if (compare_j) compare_with_J(irep);
    for (const auto& w : irep.weights) {
      Item it;
      it.name = "weight";
      it.params["weight"] = w.weight;
      const Int& e = expect[static_cast<size_t>(w.weight)];
      it.data = arc_weight_data(w, e, format == "json");
      it.status = (e == w.quotient_dim) ? "pass" : "fail";
      rep.items.push_back(std::move(it));
    }
  }
  emit(rep, format);
  return rep.failed() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-series, colored partition families, monomial ideals, and the "
               "arc-space initial-ideal lab"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  const char* env_format = std::getenv("ARCPART_FORMAT");
  std::string format = env_format ? env_format : "table";

  // verify
  auto* verify = app.add_subcommand("verify", "check catalogued identities coefficientwise");
  std::string identity = "all";
  int v_r = 2, v_order = 40;
  std::optional<int> v_i, v_m, v_k, v_l;
  verify->add_option("--identity", identity, "identity name or 'all'");
  verify->add_option("--r", v_r, "family parameter r (>= 2)");
  verify->add_option("--i", v_i, "auxiliary parameter i");
  verify->add_option("--m", v_m, "auxiliary parameter m");
  verify->add_option("--k", v_k, "auxiliary parameter k");
  verify->add_option("--l", v_l, "auxiliary parameter l");
  verify->add_option("--order", v_order, "truncation order N");
  verify->add_option("--format", format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  // count
  auto* count = app.add_subcommand("count", "count partition families over a range of n");
  std::string c_set, c_r = "2,3,4,5", c_n = "0..10";
  int c_i = 1, c_l = 0;
  count->add_option("--set", c_set, "F|B|A|G|colored|target")->required();
  count->add_option("--r", c_r, "r value (comma list for --set F)");
  count->add_option("--i", c_i, "i parameter for B/A");
  count->add_option("--l", c_l, "l parameter for G");
  count->add_option("--n", c_n, "range, e.g. 0..12 or 6");
  count->add_option("--format", format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  // hilbert
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert functions of the monomial quotients");
  std::string h_ideal;
  int h_r = 2, h_l = 0, h_order = 10;
  hilbert->add_option("--ideal", h_ideal, "Jr|Gl")->required();
  hilbert->add_option("--r", h_r, "family parameter r (>= 2)");
  hilbert->add_option("--l", h_l, "l parameter for Gl");
  hilbert->add_option("--order", h_order, "maximum weight");
  hilbert->add_option("--format", format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  // arcs
  auto* arcs = app.add_subcommand("arcs", "initial ideal of the arc equations by weight");
  int a_r = 2, a_weight = 6;
  std::string a_family = "zyx", a_index_dir = "up", a_tie = "revlex";
  bool a_adapted = false, a_plain = false, a_compare = false, a_sweep = false, a_force = false;
  arcs->add_option("--r", a_r, "surface parameter r (>= 2)");
  arcs->add_option("--weight", a_weight, "maximum weight");
  arcs->add_option("--family-order", a_family, "variable family precedence, e.g. zyx");
  arcs->add_option("--index-dir", a_index_dir, "up (higher index greater) or down");
  arcs->add_option("--tie-break", a_tie, "revlex|lex");
  arcs->add_flag("--adapted", a_adapted, "divided-power coordinates");
  arcs->add_flag("--plain", a_plain, "plain coordinates (default)");
  arcs->add_flag("--compare-j", a_compare, "compare leading monomials against J_r");
  arcs->add_flag("--sweep", a_sweep, "run all built-in orders and report agreement");
  arcs->add_flag("--force", a_force, "override the weight cap");
  arcs->add_option("--format", format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed())
      return run_verify(identity, v_r, v_i, v_m, v_k, v_l, v_order, format);
    if (count->parsed()) return run_count(c_set, c_r, c_i, c_l, c_n, format);
    if (hilbert->parsed()) return run_hilbert(h_ideal, h_r, h_l, h_order, format);
    if (arcs->parsed()) {
      if (a_adapted && a_plain) return usage_error("--adapted and --plain are exclusive");
      return run_arcs(a_r, a_weight, a_family, a_index_dir, a_tie, a_adapted, a_compare,
                      a_sweep, a_force, format);
    }
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
