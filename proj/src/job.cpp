#include "scott_brauer/job.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "scott_brauer/error.hpp"
#include "scott_brauer/fixtures.hpp"

namespace sb::cli {

using nlohmann::json;

namespace {

void only_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [k, v] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw ParseError(where + ": unknown key \"" + k + "\"");
  }
}

template <typename T>
T get_or(const json& obj, const char* key, T fallback) {
  auto it = obj.find(key);
  return it == obj.end() ? fallback : it->get<T>();
}

void check_perm(const std::vector<int>& images, std::size_t degree, const std::string& where) {
  if (images.size() != degree)
    throw ParseError(where + ": permutation has " + std::to_string(images.size()) + " images, degree is " +
                     std::to_string(degree));
  std::vector<bool> seen(degree, false);
  for (int v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= degree || seen[v]) throw ParseError(where + ": not a permutation");
    seen[v] = true;
  }
}

std::vector<int> images_of(const Perm& g) { return {g.images().begin(), g.images().end()}; }

std::string list_str(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

json verdict(const std::string& name, json value) { return json{{"name", name}, {"value", std::move(value)}}; }

struct Context {
  Field field;
  Group g;
  std::map<std::string, Group> subgroups;

  const Group& sub(const std::string& name) const { return subgroups.at(name); }
};

Context build_context(const JobSpec& s) {
  Context c{Field::make(s.p, s.m), Group(), {}};
  std::vector<Perm> gens;
  for (const auto& images : s.generators) gens.push_back(Perm::from_ints(images));
  c.g = Group::from_generators(s.degree, gens, s.options.max_order);
  for (const auto& [name, spec] : s.subgroups) {
    std::vector<Perm> hg;
    for (std::size_t i : spec.generator_indices) hg.push_back(gens[i]);
    for (const auto& images : spec.permutations) {
      Perm x = Perm::from_ints(images);
      detail::require(c.g.contains(x), "subgroup " + name + ": " + x.to_string() + " is not in the group");
      hg.push_back(x);
    }
    c.subgroups.emplace(name, generated_subgroup(s.degree, hg));
  }
  return c;
}

Module build_module(const JobSpec& s, const Context& c) {
  const auto& ms = s.module;
  auto cap = [&](std::size_t dim) {
    if (dim > s.options.max_dim)
      throw ResourceError("module dimension " + std::to_string(dim) + " exceeds the cap " +
                          std::to_string(s.options.max_dim));
  };
  if (ms.kind == "trivial") return trivial_module(c.g, c.field);
  if (ms.kind == "scott" || ms.kind == "permutation") {
    const Group& h = c.sub(ms.subgroup);
    cap(c.g.order() / h.order());
    return ms.kind == "scott" ? scott_module(c.g, h, c.field) : perm_module(c.g, h, c.field);
  }
  // matrices
  Module m{c.g, c.field, ms.matrices.empty() ? 0 : ms.matrices.front().size(), {}};
  cap(m.dim);
  if (c.g.generators().size() != s.generators.size())
    throw PreconditionError("explicit matrices need a group whose generators are exactly the listed ones");
  for (const auto& rows : ms.matrices) {
    if (rows.size() != m.dim) throw ParseError("module matrices differ in size");
    for (const auto& r : rows)
      if (r.size() != m.dim) throw ParseError("module matrices must be square");
    m.action.push_back(Mat::from_ints(c.field, rows));
  }
  validate_module(m);
  return m;
}

unsigned log_base(std::size_t q, std::size_t base) {
  unsigned d = 0;
  for (std::size_t x = 1; x < q; x *= base) ++d;
  return d;
}

void add_extensions(Report& r, const std::vector<std::size_t>& orders, const Field& base, unsigned cap) {
  for (std::size_t q : orders) {
    unsigned d = log_base(q, base.order());
    if (d > cap)
      throw ResourceError("scalar extension of degree " + std::to_string(d) + " exceeds the cap " + std::to_string(cap));
    if (std::find(r.extensions.begin(), r.extensions.end(), q) == r.extensions.end()) r.extensions.push_back(q);
  }
  std::sort(r.extensions.begin(), r.extensions.end());
}

json perm_list(const Group& h) {
  json out = json::array();
  for (const auto& x : h.generators()) out.push_back(images_of(x));
  return out;
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Decomposition decompose_capped(const Module& m, const JobSpec& s, Report& r) {
  DecomposeOptions o;
  o.seed = default_seed();
  o.max_dim = s.options.max_dim;
  auto d = decompose(m, o);
  if (d.extension_degree > 1) add_extensions(r, {d.field.order()}, m.field, s.options.max_extension_degree);
  return d;
}

class Stopwatch {
 public:
  double lap_ms() {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - t_).count();
    t_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point t_ = std::chrono::steady_clock::now();
};

void run_scott(const JobSpec& s, const Context& c, Report& r) {
  const Group& h = c.sub(s.module.subgroup);
  Module ind = perm_module(c.g, h, c.field);
  Module sc = scott_module(c.g, h, c.field);
  auto d = decompose_capped(ind, s, r);
  Group v = vertex(sc, sylow_subgroup(h, c.field.characteristic()));
  r.verdicts.push_back(verdict("permutation_dim", ind.dim));
  r.verdicts.push_back(verdict("permutation_summands", sorted(d.dims())));
  r.verdicts.push_back(verdict("scott_dim", sc.dim));
  r.verdicts.push_back(verdict("scott_vertex_order", v.order()));
  r.lines.push_back("Ind_H^G k: dim " + std::to_string(ind.dim) + ", summands " + list_str(sorted(d.dims())));
  r.lines.push_back("Sc(G,H): dim " + std::to_string(sc.dim) + ", vertex of order " + std::to_string(v.order()));
}

void run_decompose(const JobSpec& s, const Context& c, Report& r) {
  Module m = build_module(s, c);
  auto d = decompose_capped(m, s, r);
  r.verdicts.push_back(verdict("module_dim", m.dim));
  r.verdicts.push_back(verdict("summands", sorted(d.dims())));
  r.verdicts.push_back(verdict("indecomposable", d.summands.size() == 1));
  r.verdicts.push_back(verdict("extension_degree", d.extension_degree));
  r.lines.push_back("dim " + std::to_string(m.dim) + " = " + list_str(sorted(d.dims())) + " over " + d.field.name());
  r.lines.push_back(std::string("indecomposable: ") + (d.summands.size() == 1 ? "true" : "false"));
}

void run_brauer_quotient(const JobSpec& s, const Context& c, Report& r) {
  Module m = build_module(s, c);
  const Group& q = c.sub(s.q);
  detail::require(q.is_p_group(c.field.characteristic()), "Q is not a p-group");
  auto bq = brauer_quotient(m, q);
  Group cq = centralizer(c.g, q);
  auto d1 = decompose_capped(restrict(bq.module, product_set(q, cq)), s, r);
  auto d2 = decompose_capped(restrict(bq.module, cq), s, r);
  r.verdicts.push_back(verdict("brauer_dim", bq.module.dim));
  r.verdicts.push_back(verdict("normalizer_order", bq.normalizer.order()));
  r.verdicts.push_back(verdict("summands_q_centralizer", sorted(d1.dims())));
  r.verdicts.push_back(verdict("summands_centralizer", sorted(d2.dims())));
  r.lines.push_back("dim M(Q) = " + std::to_string(bq.module.dim) + ", |N_G(Q)| = " + std::to_string(bq.normalizer.order()));
  r.lines.push_back("Res_{Q C_G(Q)} M(Q) summands: " + list_str(sorted(d1.dims())));
  r.lines.push_back("Res_{C_G(Q)} M(Q) summands: " + list_str(sorted(d2.dims())));
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

std::string bool_str(const json& b) { return b.is_null() ? "not applicable" : (b.get<bool>() ? "true" : "false"); }

void run_check_bi(const JobSpec& s, const Context& c, Report& r) {
  Module m = build_module(s, c);
  const Group& p = c.sub(s.vertex);
  BrauerOptions bo;
  bo.conjugacy_reduction = s.options.conjugacy_reduction;
  auto th = check_theorem_main(m, p, bo);
  const auto& def = th.definition;
  bo.verify_vertex = false;
  add_extensions(r, def.extensions, c.field, s.options.max_extension_degree);
  add_extensions(r, th.report.extensions, c.field, s.options.max_extension_degree);

  std::size_t aut = outer_automizer_order(c.g, p);
  r.verdicts.push_back(verdict("module_dim", m.dim));
  r.verdicts.push_back(verdict("vertex_order", p.order()));
  r.verdicts.push_back(verdict("automizer_order", aut));
  r.lines.push_back("dim M = " + std::to_string(m.dim) + ", |P| = " + std::to_string(p.order()) +
                    ", |N_G(P)/P C_G(P)| = " + std::to_string(aut));
  for (const auto& rec : def.records) {
    json v = verdict("brauer_quotient", to_string(rec.verdict));
    v["q_order"] = rec.q.order();
    v["q_generators"] = perm_list(rec.q);
    v["class_id"] = rec.class_id;
    v["dim"] = rec.brauer_dim;
    v["summands"] = rec.summands;
    v["centralizer_summands"] = rec.centralizer_summands;
    r.verdicts.push_back(std::move(v));
    r.lines.push_back("  |Q| = " + std::to_string(rec.q.order()) + ": dim M(Q) = " + std::to_string(rec.brauer_dim) +
                      ", Res_{Q C_G(Q)} " + list_str(rec.summands) + " (" + to_string(rec.verdict) + ")");
  }

  json bi = verdict("BI", def.overall);
  bi["criterion"] = to_string(Criterion::definition);
  r.verdicts.push_back(bi);

  json main = verdict("BI", th.verdict);
  main["criterion"] = to_string(Criterion::main_theorem);
  main["witness_order"] = th.witness ? json(th.witness->order()) : json(nullptr);
  main["anomalies"] = th.report.anomalies;
  r.verdicts.push_back(main);

  auto ip = check_corollary_index_p(m, p, bo);
  json ipv = verdict("BI", ip ? json(ip->verdict) : json(nullptr));
  ipv["criterion"] = to_string(Criterion::index_p_corollary);
  if (ip) ipv["r_order"] = ip->r.order();
  r.verdicts.push_back(ipv);

  json kl = verdict("BI", optional_bool(check_lemma_kernel(m, p, bo)));
  kl["criterion"] = to_string(Criterion::kernel_lemma);
  r.verdicts.push_back(kl);

  std::optional<bool> np;
  if (is_normal(p, c.g)) np = check_corollary_normal(m, p, bo);
  json npv = verdict("BI", optional_bool(np));
  npv["criterion"] = to_string(Criterion::normal_corollary);
  r.verdicts.push_back(npv);

  r.lines.push_back(std::string("BI: ") + (def.overall ? "true" : "false"));
  r.lines.push_back("  normal-kernel criterion: " + std::string(th.verdict ? "true" : "false") +
                    (th.witness ? " (R of order " + std::to_string(th.witness->order()) + ")" : ""));
  r.lines.push_back("  index-p: " + bool_str(ipv["value"]));
  r.lines.push_back("  kernel-lemma: " + bool_str(kl["value"]));
  r.lines.push_back("  normal-p: " + bool_str(npv["value"]));
  for (const auto& a : th.report.anomalies) r.lines.push_back("  anomaly: " + a);
}

}  // namespace

JobSpec parse_job(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("job document: ") + e.what());
  }
  try {
    only_keys(doc, {"command", "field", "group", "module", "vertex", "q", "options"}, "job");
    JobSpec s;
    s.command = doc.at("command").get<std::string>();
    if (std::find(kCommands.begin(), kCommands.end(), s.command) == kCommands.end() || s.command == "reproduce")
      throw ParseError("job: unknown command \"" + s.command + "\"");

    const json& f = doc.at("field");
    only_keys(f, {"p", "m"}, "field");
    s.p = f.at("p").get<unsigned>();
    s.m = get_or<unsigned>(f, "m", 1);

    const json& g = doc.at("group");
    only_keys(g, {"degree", "generators", "subgroups"}, "group");
    s.degree = g.at("degree").get<std::size_t>();
    if (s.degree == 0 || s.degree > kMaxDegree) throw ParseError("group: degree must be in 1..255");
    s.generators = get_or<std::vector<std::vector<int>>>(g, "generators", {});
    for (const auto& x : s.generators) check_perm(x, s.degree, "group generator");
    if (auto it = g.find("subgroups"); it != g.end()) {
      if (!it->is_object()) throw ParseError("group.subgroups: expected an object");
      for (const auto& [name, h] : it->items()) {
        only_keys(h, {"generator_indices", "permutations"}, "subgroup " + name);
        SubgroupSpec hs;
        hs.generator_indices = get_or<std::vector<std::size_t>>(h, "generator_indices", {});
        hs.permutations = get_or<std::vector<std::vector<int>>>(h, "permutations", {});
        for (std::size_t i : hs.generator_indices)
          if (i >= s.generators.size()) throw ParseError("subgroup " + name + ": generator index out of range");
        for (const auto& x : hs.permutations) check_perm(x, s.degree, "subgroup " + name);
        s.subgroups.emplace(name, std::move(hs));
      }
    }

    auto known = [&](const std::string& name, const char* what) {
      if (!s.subgroups.count(name)) throw ParseError(std::string(what) + ": no subgroup named \"" + name + "\"");
    };
    if (auto it = doc.find("module"); it != doc.end()) {
      only_keys(*it, {"kind", "subgroup", "matrices"}, "module");
      s.module.kind = get_or<std::string>(*it, "kind", "scott");
      s.module.subgroup = get_or<std::string>(*it, "subgroup", "");
      s.module.matrices = get_or<decltype(s.module.matrices)>(*it, "matrices", {});
    }
    const auto& kind = s.module.kind;
    if (kind != "scott" && kind != "permutation" && kind != "trivial" && kind != "matrices")
      throw ParseError("module: unknown kind \"" + kind + "\"");
    if (kind == "scott" || kind == "permutation" || s.command == "scott") known(s.module.subgroup, "module");
    if (kind == "matrices" && s.module.matrices.size() != s.generators.size())
      throw ParseError("module: need one matrix per group generator");

    s.vertex = get_or<std::string>(doc, "vertex", "");
    s.q = get_or<std::string>(doc, "q", "");
    if (s.command == "check-bi" || !s.vertex.empty()) known(s.vertex, "vertex");
    if (s.command == "brauer-quotient") known(s.q, "q");

    if (auto it = doc.find("options"); it != doc.end()) {
      only_keys(*it, {"conjugacy_reduction", "max_extension_degree", "max_order", "max_dim"}, "options");
      JobOptions d;
      s.options.conjugacy_reduction = get_or<bool>(*it, "conjugacy_reduction", d.conjugacy_reduction);
      s.options.max_extension_degree = get_or<unsigned>(*it, "max_extension_degree", d.max_extension_degree);
      s.options.max_order = get_or<std::size_t>(*it, "max_order", d.max_order);
      s.options.max_dim = get_or<std::size_t>(*it, "max_dim", d.max_dim);
    }
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("job document: ") + e.what());
  }
}

json job_to_json(const JobSpec& s) {
  json subs = json::object();
  for (const auto& [name, h] : s.subgroups)
    subs[name] = json{{"generator_indices", h.generator_indices}, {"permutations", h.permutations}};
  return json{
      {"command", s.command},
      {"field", {{"p", s.p}, {"m", s.m}}},
      {"group", {{"degree", s.degree}, {"generators", s.generators}, {"subgroups", subs}}},
      {"module", {{"kind", s.module.kind}, {"subgroup", s.module.subgroup}, {"matrices", s.module.matrices}}},
      {"vertex", s.vertex},
      {"q", s.q},
      {"options",
       {{"conjugacy_reduction", s.options.conjugacy_reduction},
        {"max_extension_degree", s.options.max_extension_degree},
        {"max_order", s.options.max_order},
        {"max_dim", s.options.max_dim}}},
  };
}

std::string emit_job(const JobSpec& spec) { return job_to_json(spec).dump(2) + "\n"; }

std::string digest(const std::string& text) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr))
    throw InternalError("SHA-256 digest failed");
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

json Report::to_json() const {
  return json{{"command", command}, {"input_digest", input_digest}, {"field", field}, {"group_order", group_order},
              {"verdicts", verdicts}, {"extensions", extensions},     {"timings", timings}};
}

Report run_job(const JobSpec& spec) {
  Stopwatch total, sw;
  Report r;
  r.command = spec.command;
  r.input_digest = digest(emit_job(spec));
  Context c = build_context(spec);
  r.field = c.field.name();
  r.group_order = c.g.order();
  r.timings["build_ms"] = sw.lap_ms();
  r.lines.push_back("|G| = " + std::to_string(c.g.order()) + " over " + c.field.name());
  if (spec.command == "scott") run_scott(spec, c, r);
  else if (spec.command == "decompose") run_decompose(spec, c, r);
  else if (spec.command == "brauer-quotient") run_brauer_quotient(spec, c, r);
  else if (spec.command == "check-bi") run_check_bi(spec, c, r);
  else throw ParseError("unknown command \"" + spec.command + "\"");
  r.timings["compute_ms"] = sw.lap_ms();
  r.timings["total_ms"] = total.lap_ms();
  return r;
}

// ------------------------------------------------------------ built-in examples

namespace {

SubgroupSpec by_perms(const Group& h) {
  SubgroupSpec s;
  for (const auto& x : h.generators()) s.permutations.push_back(images_of(x));
  return s;
}

JobSpec base_job(const Group& g) {
  JobSpec s;
  s.command = "check-bi";
  s.p = 2;
  s.degree = g.degree();
  for (const auto& x : g.generators()) s.generators.push_back(images_of(x));
  s.module = {"scott", "P", {}};
  s.vertex = "P";
  return s;
}

class Expectations {
 public:
  explicit Expectations(Report& r) : r_(r) {}

  void expect(const std::string& name, const json& expected, const json& value) {
    bool ok = expected == value;
    json v = verdict(name, value);
    v["expected"] = expected;
    v["ok"] = ok;
    r_.verdicts.push_back(std::move(v));
    r_.lines.push_back(std::string(ok ? "[ok] " : "[DRIFT] ") + name + ": " + value.dump() +
                       (ok ? "" : " (expected " + expected.dump() + ")"));
    if (!ok) drift_.push_back(name + " = " + value.dump() + ", expected " + expected.dump());
  }

  void finish(const std::string& id) const {
    if (drift_.empty()) return;
    std::string msg = id + ": " + std::to_string(drift_.size()) + " expectation(s) failed:";
    for (const auto& d : drift_) msg += "\n  " + d;
    throw FixtureMismatch(msg);
  }

 private:
  Report& r_;
  std::vector<std::string> drift_;
};

std::size_t count_summands(const Module& m) { return decompose(m).summands.size(); }

}  // namespace

JobSpec example_job(const std::string& id) {
  if (id == "ex2.3") {
    auto s4 = fixtures::s4();
    JobSpec s = base_job(s4.g);
    s.subgroups["P"] = by_perms(s4.p);
    return s;
  }
  if (id == "ex3.4" || id == "ex3.5") {
    auto base = fixtures::d8_x_a4();
    JobSpec s = base_job(base.g);
    // generators a, y, z, t, b, c
    s.subgroups["A4"] = {{3, 4, 5}, {}};
    s.subgroups["B"] = {{4}, {}};
    if (id == "ex3.4") {
      auto e = fixtures::example_3_4();
      s.subgroups["R"] = {{1, 2}, {}};
      s.subgroups["P"] = {{1, 2}, {images_of(e.x)}};
      s.subgroups["Q"] = {{2}, {images_of(e.x)}};
    } else {
      s.subgroups["R"] = {{0, 1, 2}, {}};
      s.subgroups["P"] = {{0, 1, 2, 4}, {}};
    }
    return s;
  }
  throw ParseError("unknown example \"" + id + "\"; expected one of ex2.3, ex3.4, ex3.5");
}

Report reproduce(const std::string& id, const JobOptions& options) {
  JobSpec spec = example_job(id);
  spec.options = options;
  Report r = run_job(spec);
  r.command = "reproduce";
  Stopwatch sw;
  Context c = build_context(spec);
  Module m = build_module(spec, c);
  const Group& p = c.sub("P");
  auto bi = [&](const char* criterion) -> json {
    for (const auto& v : r.verdicts)
      if (v.value("name", "") == "BI" && v.value("criterion", "") == criterion) return v["value"];
    return nullptr;
  };
  r.lines.push_back("expectations (" + id + "):");
  Expectations e(r);
  if (id == "ex2.3") {
    auto d = decompose(restrict(m, p));
    bool trivial = true;
    for (const auto& x : d.summands) trivial = trivial && is_isomorphic(x.module, trivial_module(p, d.field));
    r.lines.push_back("Res^G_P M summands: " + list_str(sorted(d.dims())));
    e.expect("scott_dim", 2, m.dim);
    e.expect("res_p_summands", std::vector<std::size_t>{1, 1}, sorted(d.dims()));
    e.expect("res_p_summands_trivial", true, trivial);
    e.expect("automizer_order", 6, outer_automizer_order(c.g, p));
    e.expect("BI", false, bi("definition"));
  } else if (id == "ex3.4") {
    const Group &rr = c.sub("R"), &q = c.sub("Q");
    Group cr = centralizer(c.g, rr);
    e.expect("group_order", 96, c.g.order());
    e.expect("scott_dim", 12, m.dim);
    e.expect("scott_is_permutation_module", true, is_isomorphic(m, perm_module(c.g, p, c.field)));
    e.expect("r_normal", true, is_normal(rr, c.g));
    e.expect("r_in_kernel", true, is_subgroup(rr, module_kernel(m)));
    e.expect("centralizer_r_order", 48, cr.order());
    e.expect("res_centralizer_r_decomposable", true, count_summands(restrict(m, cr)) >= 2);
    e.expect("m_p_centralizer_indecomposable", true,
             is_indecomposable(restrict(brauer_construction(m, p), centralizer(c.g, p))));
    e.expect("m_q_centralizer_indecomposable", true,
             is_indecomposable(restrict(brauer_construction(m, q), centralizer(c.g, q))));
    e.expect("BI", false, bi("definition"));
    e.expect("BI_normal_kernel_criterion", false, bi("normal-kernel-criterion"));
    e.expect("BI_index_p", false, bi("index-p"));
  } else {
    const Group& rr = c.sub("R");
    Module v = perm_module(c.sub("A4"), c.sub("B"), c.field);
    auto head = decompose(module_head(v));
    bool distinct = head.summands.size() == 3;
    for (std::size_t i = 0; i < head.summands.size(); ++i)
      for (std::size_t j = i + 1; j < head.summands.size(); ++j)
        distinct = distinct && !is_isomorphic(head.summands[i].module, head.summands[j].module);
    e.expect("p_order", 16, p.order());
    e.expect("scott_dim", 6, m.dim);
    e.expect("permutation_module_indecomposable", true, is_indecomposable(perm_module(c.g, p, c.field)));
    e.expect("ind_c2_a4_head_dim", 3, v.dim - module_radical(v).rows());
    e.expect("ind_c2_a4_socle_dim", 3, module_socle(v).rows());
    e.expect("ind_c2_a4_loewy_length", 2, loewy_length(v));
    e.expect("ind_c2_a4_head_distinct_simples", true, distinct);
    e.expect("p_r_index", 2, p.order() / rr.order());
    e.expect("r_in_kernel", true, is_subgroup(rr, module_kernel(m)));
    e.expect("res_centralizer_r_indecomposable", true, is_indecomposable(restrict(m, centralizer(c.g, rr))));
    e.expect("automizer_order", 1, outer_automizer_order(c.g, p));
    e.expect("BI", true, bi("definition"));
    e.expect("BI_normal_kernel_criterion", true, bi("normal-kernel-criterion"));
    e.expect("BI_index_p", true, bi("index-p"));
  }
  r.timings["expectations_ms"] = sw.lap_ms();
  e.finish(id);
  return r;
}

}  // namespace sb::cli
