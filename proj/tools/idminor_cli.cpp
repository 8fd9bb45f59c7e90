// Command-line frontend: idminor <command> [options].
// Exit status: 0 success, 1 property violated, 2 usage or parse error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "idminor/constructions.hpp"
#include "idminor/functions.hpp"
#include "idminor/io.hpp"
#include "idminor/patterns.hpp"
#include "idminor/strings.hpp"

using namespace idminor;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, violated = 1, usage = 2 };

struct Options {
  bool json = false;
  int jobs = 1;
};

/// What every command returns: inputs, payload and human-readable lines.
struct Report {
  Report() = default;
  explicit Report(std::string name) : command(std::move(name)) {}

  std::string command;
  json inputs = json::object();
  json result = json::object();
  std::vector<std::string> lines;
  std::string search_space; // empty for commands that do not search
  bool exhaustive = true;
  std::size_t space_size = 0;
  int status = Exit::ok;

  void line(const std::string &s) { lines.push_back(s); }
  void space(std::size_t size, const std::string &what, bool full = true) {
    space_size = size;
    exhaustive = full;
    search_space = std::to_string(size) + " " + what + (full ? " (exhaustive)" : " (sampled)");
  }
};

std::string compact(const Permutation &p) {
  if (p.degree() == 0)
    return "e";
  if (p.degree() > 9)
    return format_permutation(p);
  std::string s;
  for (int i = 0; i < p.degree(); ++i)
    s += static_cast<char>('1' + p(i));
  return s;
}

std::string join(const std::vector<std::string> &items, const std::string &sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i)
    out += (i ? sep : "") + items[i];
  return out;
}

template <typename Range> std::vector<std::string> compact_all(const Range &perms) {
  std::vector<std::string> out;
  for (const Permutation &p : perms)
    out.push_back(compact(p));
  return out;
}

std::string couple_text(const Couple &I) {
  return "{" + std::to_string(I.lo + 1) + "," + std::to_string(I.hi + 1) + "}";
}

std::string table_text(const Table &t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i)
    out += (i ? " " : "") + std::to_string(t[i] + 1);
  return out;
}

std::vector<int> one_based(const Table &t) {
  std::vector<int> out(t.begin(), t.end());
  for (int &v : out)
    ++v;
  return out;
}

FiniteFunction load_function(const std::string &path) { return parse_function(read_file(path)); }

Permutation perm_from_tokens(const std::vector<std::string> &tokens) {
  return parse_permutation(join(tokens, " "));
}

/// Runs body(begin, end) over disjoint index ranges on up to jobs threads.
template <typename Body> void parallel_ranges(std::size_t total, int jobs, Body body) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(jobs), total));
  if (workers == 1) {
    body(std::size_t{0}, total);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (total + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk, end = std::min(total, begin + chunk);
    if (begin < end)
      pool.emplace_back([=, &body] { body(begin, end); });
  }
  for (auto &t : pool)
    t.join();
}

/// Name of a standard group equal to G, or empty.
std::string group_shape(const PermGroup &G) {
  const int n = G.degree();
  const std::vector<std::pair<std::string, GroupName>> plain = {
      {"S_n", GroupName::symmetric}, {"trivial", GroupName::trivial},
      {"<desc_n>", GroupName::desc_pair}, {"Z_n", GroupName::cyclic},
      {"D_n", GroupName::dihedral}};
  for (const auto &[name, g] : plain)
    if (named_group(g, n) == G)
      return name;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; a + b <= n; ++b)
      if (named_group(GroupName::stabilizer_ab, n, a, b) == G)
        return "S_n^{" + std::to_string(a) + "," + std::to_string(b) + "}";
  for (int c = 1; 2 * c <= n; ++c)
    if (named_group(GroupName::stabilizer_cc_desc, n, c) == G)
      return "<S_n^{" + std::to_string(c) + "," + std::to_string(c) + "}, desc_n>";
  return "";
}

// ---- commands ----

Report cmd_uim(const std::string &path) {
  Report r{"uim"};
  r.inputs["file"] = path;
  const FiniteFunction f = load_function(path);
  const UimResult u = has_unique_identification_minor(f);
  r.result["uim"] = u.unique;
  r.result["degenerate"] = u.degenerate;
  r.line(std::string("uim: ") + (u.unique ? "true" : "false"));
  if (u.degenerate)
    std::cerr << "warning: arity 2 has a single identification minor; the verdict is degenerate\n";
  if (u.unique) {
    r.result["h"] = one_based(u.h->table());
    r.line("h = f_{" + std::to_string(f.arity() - 1) + "," + std::to_string(f.arity()) +
           "}: " + table_text(u.h->table()));
    json w = json::array();
    for (const auto &[I, rho] : u.witnesses) {
      w.push_back({{"couple", {I.lo + 1, I.hi + 1}}, {"rho", compact(rho)}});
      r.line("  f_" + couple_text(I) + " = h o rho, rho = " + compact(rho));
    }
    r.result["witnesses"] = w;
  } else {
    r.status = Exit::violated;
    const FiniteFunction h = identification_minor(f, Couple{f.arity() - 2, f.arity() - 1});
    for (const Couple &I : couples(f.arity()))
      if (!is_similar(identification_minor(f, I), h)) {
        r.result["counterexample"] = {I.lo + 1, I.hi + 1};
        r.line("counterexample: f_" + couple_text(I) + " is not similar to f_" +
               couple_text(Couple{f.arity() - 2, f.arity() - 1}));
        break;
      }
  }
  r.space(couples(f.arity()).size(), "identification minors");
  return r;
}

Report cmd_classify(const std::string &path) {
  Report r{"classify"};
  r.inputs["file"] = path;
  const FiniteFunction f = load_function(path);
  const auto labels = classify(f);
  json arr = json::array();
  std::vector<std::string> names;
  for (ClassLabel l : labels) {
    arr.push_back(to_string(l));
    names.push_back(to_string(l));
  }
  r.result["classes"] = arr;
  r.line("classes: " + (names.empty() ? std::string("(none)") : join(names, " ")));
  for (ClassLabel l : {ClassLabel::UIM, ClassLabel::OFO, ClassLabel::CS, ClassLabel::TwoST,
                       ClassLabel::SYMM, ClassLabel::SUPP})
    r.line("  " + to_string(l) + ": " + (labels.count(l) ? "yes" : "no"));
  return r;
}

Report cmd_invgroup(const std::string &path, bool list) {
  Report r{"invgroup"};
  r.inputs["file"] = path;
  const FiniteFunction f = load_function(path);
  const PermGroup G = invariance_group(f);
  const std::string shape = group_shape(G);
  r.result["order"] = G.order();
  r.result["elements"] = compact_all(G.elements());
  r.result["shape"] = shape;
  r.result["totally_symmetric"] = is_totally_symmetric(f);
  r.result["two_set_transitive"] = is_2set_transitive(f);
  r.line("order: " + std::to_string(G.order()));
  if (!shape.empty())
    r.line("shape: " + shape);
  if (list || G.order() <= 24)
    r.line("elements: " + join(compact_all(G.elements()), " "));
  r.line(std::string("totally symmetric: ") + (is_totally_symmetric(f) ? "true" : "false"));
  r.line(std::string("2-set-transitive: ") + (is_2set_transitive(f) ? "true" : "false"));
  r.space(all_permutations(f.arity()).size(), "permutations");
  return r;
}

Report cmd_deck(const std::string &path) {
  Report r{"deck"};
  r.inputs["file"] = path;
  const FiniteFunction f = load_function(path);
  const Deck d = deck(f);
  json cards = json::array();
  r.line("distinct minors: " + std::to_string(d.size()));
  for (const auto &[key, count] : d) {
    cards.push_back({{"canonical_table", one_based(key)}, {"multiplicity", count}});
    r.line("  x" + std::to_string(count) + ": " + table_text(key));
  }
  r.result["distinct"] = d.size();
  r.result["cards"] = cards;
  r.space(couples(f.arity()).size(), "identification minors");
  return r;
}

Report cmd_canon(const std::vector<std::string> &tokens, int k, const std::string &which) {
  Report r{"canon"};
  const Tuple a = parse_tuple(join(tokens, " "), k);
  r.inputs["tuple"] = format_tuple(a);
  r.inputs["k"] = a.alphabet();
  r.inputs["which"] = which;
  auto emit = [&](const std::string &name, const std::string &value, const std::string &canon) {
    r.result[name] = {{"value", value}, {"canonical", canon}};
    r.line(name + ": " + value + (canon.empty() ? "" : "   canonical: " + canon));
  };
  const bool all = which == "all";
  if (!all && which != "cs" && which != "ofo" && which != "ms" && which != "supp")
    throw std::invalid_argument("--which must be one of cs, ofo, ms, supp, all");
  if (all || which == "cs")
    emit("cs", format_cs(cs(a)), format_tuple(cs_canonical(a)));
  if (all || which == "ofo")
    emit("ofo", format_tuple(ofo(a)), format_tuple(ofo_canonical(a)));
  if (all || which == "ms")
    emit("ms", format_multiset(ms(a)), format_tuple(fiber_key(Invariant::ms, a)));
  if (all || which == "supp")
    emit("supp", format_tuple(fiber_key(Invariant::supp, a)), "");
  return r;
}

Report cmd_pat(const std::vector<std::string> &tokens, int l) {
  Report r{"pat"};
  const Permutation sigma = perm_from_tokens(tokens);
  r.inputs["sigma"] = compact(sigma);
  r.inputs["l"] = l;
  const PermSet P = patterns(sigma, l);
  r.result["patterns"] = compact_all(P);
  r.line("patterns of length " + std::to_string(l) + ": " + std::to_string(P.size()));
  r.line("  " + join(compact_all(P), " "));
  r.space(subsets_of_size(sigma.degree(), l).size(), "position subsets");
  return r;
}

Report cmd_comp(int n, const std::string &group_file, const std::string &name, int degree,
                int a, int b, bool list) {
  Report r{"comp"};
  PermGroup G = PermGroup::trivial(0);
  if (!group_file.empty()) {
    G = parse_group(read_file(group_file));
    r.inputs["group_file"] = group_file;
  } else if (!name.empty()) {
    G = named_group(parse_group_name(name), degree, a, b);
    r.inputs["group"] = name;
    r.inputs["degree"] = degree;
  } else {
    throw std::invalid_argument("comp needs a group file or --group");
  }
  r.inputs["n"] = n;
  const PermGroup C = comp(n, G);
  const std::string shape = group_shape(C);
  r.result["input_order"] = G.order();
  r.result["order"] = C.order();
  r.result["shape"] = shape;
  r.result["elements"] = compact_all(C.elements());
  r.line("|G| = " + std::to_string(G.order()) + " in S_" + std::to_string(G.degree()));
  r.line("|Comp^(" + std::to_string(n) + ") G| = " + std::to_string(C.order()));
  if (!shape.empty())
    r.line("shape: " + shape);
  if (list || C.order() <= 24)
    r.line("elements: " + join(compact_all(C.elements()), " "));
  r.space(all_permutations(n).size(), "permutations");
  return r;
}

Report cmd_equalizing(const std::vector<std::string> &tokens) {
  Report r{"equalizing"};
  const Permutation sigma = perm_from_tokens(tokens);
  r.inputs["sigma"] = compact(sigma);
  const EqualizingClassification c = classify_equalizing(sigma);
  json levels = json::array();
  r.line(" l  |Pat|  |<DeltaPat>|  verdict");
  std::vector<std::string> diff;
  for (const EqualizingReport &e : c.levels) {
    levels.push_back({{"l", e.l},
                      {"patterns", e.pattern_count},
                      {"generated_order", e.generated_order},
                      {"equalizing", e.equalizing}});
    char buf[96];
    std::snprintf(buf, sizeof buf, "%2d  %5zu  %12zu  %s", e.l, e.pattern_count,
                  e.generated_order, e.equalizing ? "equalizing" : "differentiating");
    r.line(buf);
    if (!e.equalizing)
      diff.push_back(std::to_string(e.l));
  }
  r.result["levels"] = levels;
  r.result["equalizing"] = c.equalizing;
  r.line("differentiating at l in {" + join(diff, ",") + "}");
  return r;
}

/// Writes text to path, or to stdout when path is empty.
void emit_file(const std::string &path, const std::string &text) {
  if (path.empty())
    std::cout << text;
  else
    write_file(path, text);
}

Report cmd_witness_new(int k, int n, int m, const std::string &out, const std::string &spec_out,
                       bool as_json) {
  Report r{"witness-new"};
  r.inputs = {{"k", k}, {"n", n}, {"m", m}};
  const CSSpec spec = witness_new_spec(k, n, m);
  const FiniteFunction f = build_cs_function(spec);
  r.result["file"] = out;
  r.result["table"] = one_based(f.table());
  // In JSON mode the table travels in the report instead of stdout.
  if (!out.empty() || !as_json)
    emit_file(out, write_function(f));
  if (!spec_out.empty()) {
    write_file(spec_out, write_spec(spec));
    r.result["spec_file"] = spec_out;
  }
  if (!out.empty())
    r.line("wrote " + out);
  if (!spec_out.empty())
    r.line("wrote " + spec_out);
  return r;
}

Report cmd_witness_pair(const std::vector<std::string> &tokens, int l, int k, int n, int m,
                        const std::string &out_f, const std::string &out_g) {
  Report r{"witness-pair"};
  const Permutation sigma = perm_from_tokens(tokens);
  r.inputs = {{"sigma", compact(sigma)}, {"l", l}, {"k", k}, {"n", n}, {"m", m}};
  try {
    const SimilarPair p = witness_similar_pair(sigma, l, k, n, m);
    r.result["rho"] = compact(p.rho);
    r.result["f"] = one_based(p.f.table());
    r.result["g"] = one_based(p.g.table());
    r.result["distinct"] = p.f != p.g;
    r.line("sigma = " + compact(sigma) + " is " + std::to_string(l) + "-differentiating");
    r.line("rho = " + compact(p.rho));
    r.line("g = f o sigma, f != g: " + std::string(p.f != p.g ? "true" : "false"));
    if (!out_f.empty()) {
      write_file(out_f, write_function(p.f));
      r.line("wrote " + out_f);
    }
    if (!out_g.empty()) {
      write_file(out_g, write_function(p.g));
      r.line("wrote " + out_g);
    }
  } catch (const NotDifferentiating &e) {
    r.status = Exit::violated;
    r.result["error"] = e.what();
    r.result["generated_order"] = e.report().generated_order;
    r.line("sigma = " + compact(sigma) + " is " + std::to_string(l) + "-equalizing: " + e.what());
  }
  return r;
}

Report cmd_oracle(int k, int n, const std::string &relation) {
  Report r{"oracle"};
  r.inputs = {{"k", k}, {"n", n}, {"relation", relation}};
  Relation rel;
  Invariant phi;
  if (relation == "cs" || relation == "sim2") {
    rel = Relation::sim2;
    phi = Invariant::cs;
  } else if (relation == "ofo" || relation == "sim") {
    rel = Relation::sim;
    phi = Invariant::ofo;
  } else {
    throw std::invalid_argument("--relation must be cs, sim2, ofo or sim");
  }
  const auto classes = closure_classes(k, n, rel);
  const auto fibers = fiber_partition(k, n, phi);
  const bool match = classes == fibers;
  const int count = classes.empty() ? 0 : *std::max_element(classes.begin(), classes.end()) + 1;
  r.result["match"] = match;
  r.result["classes"] = count;
  r.line("classes match " + to_string(phi) + " fibers: " + (match ? "true" : "false") + " (" +
         std::to_string(classes.size()) + " tuples)");
  r.line(std::to_string(count) + " classes");
  r.space(classes.size(), "tuples");
  if (!match)
    r.status = Exit::violated;
  return r;
}

// ---- sweeps ----

std::vector<Permutation> listed_differentiating(int n, int l) {
  std::set<Permutation> out;
  if (l == 2) {
    out.insert(Permutation::descending(n));
  } else if (l == n) {
    for (const Permutation &s : all_permutations(n))
      if (!s.is_identity())
        out.insert(s);
  } else if (l >= 3) {
    for (int m = 0; m <= n - 1; ++m)
      out.insert(direct_sum(Permutation::descending(m), Permutation::descending(n - m)));
    for (int p = 1; p < l; ++p)
      for (const Permutation &pi : all_permutations(p))
        for (const Permutation &tau : all_permutations(l - p))
          out.insert(skew_sum(skew_sum(pi, Permutation::descending(n - l)), tau));
  }
  return {out.begin(), out.end()};
}

Report sweep_l_diff(int n, int l, bool report_unlisted, int jobs) {
  Report r{"sweep l-diff"};
  r.inputs = {{"n", n}, {"l", l}, {"report_unlisted", report_unlisted}};
  if (n < 1 || n > 9 || l < 1 || l > n)
    throw std::invalid_argument("sweep l-diff needs 1 <= l <= n <= 9");
  const auto perms = all_permutations(n);
  std::vector<char> diff(perms.size(), 0);
  parallel_ranges(perms.size(), jobs, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i)
      diff[i] = !is_l_equalizing(perms[i], l).equalizing;
  });
  std::vector<Permutation> differentiating;
  for (std::size_t i = 0; i < perms.size(); ++i)
    if (diff[i])
      differentiating.push_back(perms[i]);
  const auto listed = listed_differentiating(n, l);
  std::vector<Permutation> missed, unlisted;
  std::set_difference(listed.begin(), listed.end(), differentiating.begin(),
                      differentiating.end(), std::back_inserter(missed));
  std::set_difference(differentiating.begin(), differentiating.end(), listed.begin(),
                      listed.end(), std::back_inserter(unlisted));
  // At l = 2 and l = n the listed set is the whole answer; otherwise it is
  // only a sufficient condition.
  const bool complete = l == 2 || l == n || l == 1;
  const bool pass = missed.empty() && (!complete || unlisted.empty());
  r.result["differentiating_count"] = differentiating.size();
  r.result["listed_count"] = listed.size();
  r.result["listed_not_differentiating"] = compact_all(missed);
  r.result["pass"] = pass;
  r.line("l-differentiating permutations, n = " + std::to_string(n) + ", l = " + std::to_string(l));
  if (differentiating.size() <= 24)
    r.line("differentiating = {" + join(compact_all(differentiating), ", ") + "}" +
           (differentiating.size() == 1 ? " only" : ""));
  else
    r.line("differentiating: " + std::to_string(differentiating.size()) + " permutations");
  r.line("in the known families: " + std::to_string(listed.size()) +
         (complete ? " (complete characterization)" : " (sufficient condition)"));
  for (const Permutation &s : missed)
    r.line("counterexample: listed " + compact(s) + " is equalizing");
  if (report_unlisted) {
    r.result["unlisted"] = compact_all(unlisted);
    r.line("differentiating but unlisted: " + std::to_string(unlisted.size()));
    for (const Permutation &s : unlisted)
      r.line("  " + compact(s));
  }
  r.line(std::string("verdict: ") + (pass ? "PASS" : "FAIL"));
  r.space(perms.size(), "permutations");
  r.status = pass ? Exit::ok : Exit::violated;
  return r;
}

Report sweep_classes(int k, int n, int m, int jobs) {
  Report r{"sweep classes"};
  r.inputs = {{"k", k}, {"n", n}, {"m", m}};
  if (k < 1 || n < 2 || m < 1)
    throw std::invalid_argument("sweep classes needs k >= 1, n >= 2, m >= 1");
  const std::size_t size = power(k, n);
  double total_d = 1;
  for (std::size_t i = 0; i < size; ++i)
    total_d *= m;
  if (total_d > 1e7)
    throw std::invalid_argument("sweep classes: more than 10^7 functions");
  const std::size_t total = static_cast<std::size_t>(total_d);
  const FunctionSpace space(k, n);
  std::map<std::set<ClassLabel>, std::size_t> profiles;
  std::mutex merge;
  parallel_ranges(total, jobs, [&](std::size_t b, std::size_t e) {
    std::map<std::set<ClassLabel>, std::size_t> local;
    Table t(size);
    for (std::size_t code = b; code < e; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < size; ++i) {
        t[i] = static_cast<int>(c % m);
        c /= m;
      }
      ++local[classify(FiniteFunction(k, n, m, t), space)];
    }
    std::lock_guard lock(merge);
    for (const auto &[labels, count] : local)
      profiles[labels] += count;
  });
  const std::vector<ClassLabel> all = {ClassLabel::UIM,   ClassLabel::OFO,  ClassLabel::CS,
                                       ClassLabel::TwoST, ClassLabel::SYMM, ClassLabel::SUPP};
  std::map<ClassLabel, std::size_t> sizes;
  // Each inclusion as (name, predicate on a label set); counts violators.
  using Has = std::function<bool(ClassLabel)>;
  std::vector<std::pair<std::string, std::function<bool(const Has &)>>> checks = {
      {"SYMM subset of 2ST", [](const Has &h) { return !h(ClassLabel::SYMM) || h(ClassLabel::TwoST); }},
      {"SUPP subset of OFO, CS, 2ST",
       [](const Has &h) {
         return !h(ClassLabel::SUPP) ||
                (h(ClassLabel::OFO) && h(ClassLabel::CS) && h(ClassLabel::TwoST));
       }},
      {"OFO, CS, 2ST subset of UIM",
       [](const Has &h) {
         return !(h(ClassLabel::OFO) || h(ClassLabel::CS) || h(ClassLabel::TwoST)) ||
                h(ClassLabel::UIM);
       }},
  };
  if (k == 2)
    checks.push_back({"CS = SYMM (k = 2)", [](const Has &h) {
                        return h(ClassLabel::CS) == h(ClassLabel::SYMM);
                      }});
  if (n >= k + 2) {
    checks.push_back({"OFO and CS = SUPP", [](const Has &h) {
                        return (h(ClassLabel::OFO) && h(ClassLabel::CS)) == h(ClassLabel::SUPP);
                      }});
    checks.push_back({"2ST and CS = SYMM", [](const Has &h) {
                        return (h(ClassLabel::TwoST) && h(ClassLabel::CS)) == h(ClassLabel::SYMM);
                      }});
    checks.push_back({"2ST and OFO = SUPP", [](const Has &h) {
                        return (h(ClassLabel::TwoST) && h(ClassLabel::OFO)) == h(ClassLabel::SUPP);
                      }});
  }
  std::vector<std::size_t> violations(checks.size(), 0);
  for (const auto &[labels, count] : profiles) {
    for (ClassLabel l : labels)
      sizes[l] += count;
    const Has has = [&](ClassLabel l) { return labels.count(l) > 0; };
    for (std::size_t i = 0; i < checks.size(); ++i)
      if (!checks[i].second(has))
        violations[i] += count;
  }
  r.line("class sizes, k = " + std::to_string(k) + ", n = " + std::to_string(n));
  json sz = json::object();
  for (ClassLabel l : all) {
    sz[to_string(l)] = sizes[l];
    r.line("  " + to_string(l) + ": " + std::to_string(sizes[l]));
  }
  r.result["sizes"] = sz;
  json verdicts = json::array();
  bool pass = true;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    verdicts.push_back({{"inclusion", checks[i].first}, {"violations", violations[i]}});
    r.line(checks[i].first + ": " + (violations[i] ? "FAIL (" + std::to_string(violations[i]) +
                                                         " functions)"
                                                   : "holds"));
    pass = pass && violations[i] == 0;
  }
  r.result["inclusions"] = verdicts;
  r.result["pass"] = pass;
  r.line(std::string("verdict: ") + (pass ? "PASS" : "FAIL"));
  r.space(total, "functions");
  r.status = pass ? Exit::ok : Exit::violated;
  return r;
}

int largest_proper_divisor(int x) {
  for (int d = x / 2; d >= 1; --d)
    if (x % d == 0)
      return d;
  return 1;
}

Report sweep_compn(int l, int n_max, int jobs) {
  Report r{"sweep compn"};
  r.inputs = {{"l", l}, {"n", n_max}};
  if (l < 1 || l > 5 || n_max < l || n_max > 9)
    throw std::invalid_argument("sweep compn needs 1 <= l <= 5 and l <= n <= 9");
  const auto subs = all_subgroups(l);
  const auto cycle = Permutation::natural_cycle(l);
  struct Row {
    std::string kind;
    int a = 0, b = 0, from = 0;
    std::vector<std::pair<int, std::string>> shapes;
    std::vector<int> failures;
  };
  std::vector<Row> rows(subs.size());
  std::size_t computed = 0;
  std::mutex count_lock;
  parallel_ranges(subs.size(), jobs, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const PermGroup &G = subs[i];
      Row &row = rows[i];
      const bool transitive = is_transitive_group(G);
      const bool primitive = transitive && is_primitive_group(G);
      const bool has_cycle = G.elements().count(cycle) > 0;
      if (transitive && (primitive || has_cycle)) {
        row.kind = "transitive";
        row.from = l + 2;
      } else {
        row.kind = transitive ? "imprimitive" : "intransitive";
        while (row.a < l && named_group(GroupName::stabilizer_ab, l, row.a + 1, 0).is_subgroup_of(G))
          ++row.a;
        while (row.b < l - row.a &&
               named_group(GroupName::stabilizer_ab, l, 0, row.b + 1).is_subgroup_of(G))
          ++row.b;
        row.from = l + (transitive ? largest_proper_divisor(l) : l - 1);
      }
      for (int n = row.from; n <= n_max; ++n) {
        const PermGroup C = comp(n, G);
        row.shapes.emplace_back(n, group_shape(C));
        bool fits = false;
        if (row.kind == "transitive") {
          for (GroupName g : {GroupName::symmetric, GroupName::dihedral, GroupName::cyclic,
                              GroupName::desc_pair, GroupName::trivial})
            fits = fits || named_group(g, n) == C;
        } else {
          const PermGroup S = named_group(GroupName::stabilizer_ab, n, row.a, row.b);
          PermSet gens = S.elements();
          gens.insert(Permutation::descending(n));
          fits = C == S || C == generate(gens);
        }
        if (!fits)
          row.failures.push_back(n);
        std::lock_guard lock(count_lock);
        ++computed;
      }
    }
  });
  bool pass = true;
  json groups = json::array();
  r.line("Comp^(n) G for the subgroups G of S_" + std::to_string(l) + ", n up to " +
         std::to_string(n_max));
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const Row &row = rows[i];
    json shapes = json::object();
    std::vector<std::string> parts;
    for (const auto &[n, s] : row.shapes) {
      shapes[std::to_string(n)] = s;
      parts.push_back("n=" + std::to_string(n) + ": " + (s.empty() ? "?" : s));
    }
    groups.push_back({{"generators_order", subs[i].order()},
                      {"elements", compact_all(subs[i].elements())},
                      {"kind", row.kind},
                      {"a", row.a},
                      {"b", row.b},
                      {"checked_from", row.from},
                      {"comp_shapes", shapes},
                      {"failures", row.failures}});
    std::string head = "|G|=" + std::to_string(subs[i].order()) + " " + row.kind;
    if (row.kind != "transitive")
      head += " a=" + std::to_string(row.a) + " b=" + std::to_string(row.b);
    r.line(head + (parts.empty() ? " (no n in range)" : " -> " + join(parts, "; ")));
    for (int n : row.failures)
      r.line("  counterexample at n = " + std::to_string(n));
    pass = pass && row.failures.empty();
  }
  r.result["groups"] = groups;
  r.result["pass"] = pass;
  r.line(std::string("verdict: ") + (pass ? "PASS" : "FAIL"));
  r.space(computed, "comp computations over " + std::to_string(subs.size()) + " subgroups");
  r.status = pass ? Exit::ok : Exit::violated;
  return r;
}

void print(const Report &r, const Options &opt, double ms) {
  if (opt.json) {
    json out = {{"command", r.command}, {"inputs", r.inputs}, {"result", r.result}};
    if (!r.search_space.empty())
      out["search_space"] = {{"size", r.space_size}, {"exhaustive", r.exhaustive}};
    out["status"] = r.status;
    out["elapsed_ms"] = ms;
    std::cout << out.dump(2) << '\n';
    return;
  }
  for (const std::string &l : r.lines)
    std::cout << l << '\n';
  if (!r.search_space.empty())
    std::cout << "search space: " << r.search_space << '\n';
  std::cerr << "time: " << static_cast<long>(ms) << " ms\n";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Identification minors, cs and ofo invariants, permutation patterns"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--jobs,-j", opt.jobs, "worker threads for sweeps")->check(CLI::Range(1, 256));

  std::string file, which = "all", relation = "cs", sweep_name, group_file, group_name;
  std::string out, spec_out, out_f, out_g;
  std::vector<std::string> tokens;
  int k = 0, n = 0, l = 2, m = 2, degree = 0, a = 0, b = 0;
  bool list = false, report_unlisted = false;

  auto *uim = app.add_subcommand("uim", "unique identification minor check");
  uim->add_option("file", file, "function file")->required();
  auto *cls = app.add_subcommand("classify", "class membership (UIM, OFO, CS, 2ST, SYMM, SUPP)");
  cls->add_option("file", file, "function file")->required();
  auto *inv = app.add_subcommand("invgroup", "invariance group");
  inv->add_option("file", file, "function file")->required();
  inv->add_flag("--list", list, "always list the elements");
  auto *dk = app.add_subcommand("deck", "deck of identification minors");
  dk->add_option("file", file, "function file")->required();
  auto *canon = app.add_subcommand("canon", "invariants and canonical forms of a tuple");
  canon->add_option("tuple", tokens, "entries in 1..k, or a lowercase word")->required();
  canon->add_option("--k", k, "alphabet size (default: largest entry)");
  canon->add_option("--which", which, "cs, ofo, ms, supp or all");
  auto *pat = app.add_subcommand("pat", "patterns of length l");
  pat->add_option("perm", tokens, "permutation")->required();
  pat->add_option("--l", l, "pattern length")->required();
  auto *cmp = app.add_subcommand("comp", "Comp^(n) of a permutation group");
  cmp->add_option("group_file", group_file, "group file");
  cmp->add_option("--n", n, "target degree")->required();
  cmp->add_option("--group", group_name, "named group instead of a file");
  cmp->add_option("--degree", degree, "degree of the named group");
  cmp->add_option("--a", a, "a (or c) for stabilizer groups");
  cmp->add_option("--b", b, "b for stabilizer groups");
  cmp->add_flag("--list", list, "always list the elements");
  auto *eq = app.add_subcommand("equalizing", "per-level equalizing table");
  eq->add_option("perm", tokens, "permutation")->required();
  auto *wn = app.add_subcommand("witness-new", "cs-determined function not similar to an ofo-determined one");
  wn->add_option("--k", k, "alphabet size")->required();
  wn->add_option("--n", n, "arity")->required();
  wn->add_option("--m", m, "codomain size");
  wn->add_option("-o,--out", out, "function file (default: stdout)");
  wn->add_option("--spec-out", spec_out, "also write the cs spec");
  auto *wp = app.add_subcommand("witness-pair", "distinct similar cs-determined pair");
  wp->add_option("perm", tokens, "l-differentiating permutation")->required();
  wp->add_option("--l", l, "level")->required();
  wp->add_option("--k", k, "alphabet size")->required();
  wp->add_option("--n", n, "arity (defaults to the degree of perm)");
  wp->add_option("--m", m, "codomain size");
  wp->add_option("--out-f", out_f, "file for f");
  wp->add_option("--out-g", out_g, "file for g");
  auto *orc = app.add_subcommand("oracle", "closure classes against fiber partitions");
  orc->add_option("--k", k, "alphabet size")->required();
  orc->add_option("--n", n, "arity")->required();
  orc->add_option("--relation", relation, "cs (or sim2), ofo (or sim)");
  auto *sw = app.add_subcommand("sweep", "named verification sweeps");
  sw->add_option("name", sweep_name, "l-diff, classes or compn")
      ->required()
      ->check(CLI::IsMember({"l-diff", "classes", "compn"}));
  sw->add_option("--n", n, "arity or degree");
  sw->add_option("--l", l, "pattern length");
  sw->add_option("--k", k, "alphabet size");
  sw->add_option("--m", m, "codomain size");
  sw->add_flag("--report-unlisted", report_unlisted, "list differentiating permutations not covered");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? Exit::ok : Exit::usage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Report r;
    if (*uim)
      r = cmd_uim(file);
    else if (*cls)
      r = cmd_classify(file);
    else if (*inv)
      r = cmd_invgroup(file, list);
    else if (*dk)
      r = cmd_deck(file);
    else if (*canon)
      r = cmd_canon(tokens, k, which);
    else if (*pat)
      r = cmd_pat(tokens, l);
    else if (*cmp)
      r = cmd_comp(n, group_file, group_name, degree, a, b, list);
    else if (*eq)
      r = cmd_equalizing(tokens);
    else if (*wn)
      r = cmd_witness_new(k, n, m, out, spec_out, opt.json);
    else if (*wp)
      r = cmd_witness_pair(tokens, l, k, n ? n : perm_from_tokens(tokens).degree(), m, out_f,
                           out_g);
    else if (*orc)
      r = cmd_oracle(k, n, relation);
    else if (sweep_name == "l-diff")
      r = sweep_l_diff(n, l, report_unlisted, opt.jobs);
    else if (sweep_name == "classes")
      r = sweep_classes(k, n, m, opt.jobs);
    else
      r = sweep_compn(l, n, opt.jobs);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    // witness-new without -o writes the function to stdout; keep it clean.
    if (!(*wn && out.empty() && !opt.json))
      print(r, opt, ms);
    return r.status;
  } catch (const ParseError &e) {
    std::cerr << "error: " << (file.empty() ? group_file : file) << ": " << e.what() << '\n';
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return Exit::usage;
}
