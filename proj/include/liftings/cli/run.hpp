#pragma once

// Executes a JobSpec and builds its report. Reports are nlohmann::ordered_json
// with a fixed key order, so identical jobs give byte-identical output.

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "liftings/cli/job.hpp"
#include "liftings/liftings.hpp"

namespace liftings::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "liftings-report/1";

inline int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::TheoremViolation:
    case ErrorKind::InternalConsistency: return 4;
    case ErrorKind::SpecializationFailure: return 5;
    default: return 3;
  }
}

inline Json error_report(const Error& e) {
  Json j;
  j["schema"] = kSchema;
  j["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}, {"exit_code", exit_code(e.kind())}};
  return j;
}

namespace detail {

template <class K>
struct Context {
  const JobSpec& job;
  typename K::ring_type field;
  PolyRing<K> ring;      // K[x]
  PolyRing<K> ext;       // K[x, xn]
  std::vector<std::string> names, ext_names;

  Context(const JobSpec& j, typename K::ring_type f)
      : job(j), field(f), ring(j.variables.size(), f), ext(j.variables.size() + 1, f), names(j.variables) {
    ext_names = names;
    ext_names.push_back(j.xn_name());
    for (const auto& v : names)
      if (v == j.xn_name()) fail(ErrorKind::Parse, "the lifting variable " + v + " is already a ring variable");
  }

  std::size_t n() const { return ring.nvars; }

  Polynomial<K> parse(const Located& g, const PolyRing<K>& r, const std::vector<std::string>& nm) const {
    try {
      return parse_polynomial(g.text, r, nm);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Parse) throw;
      parse_error(g.line, g.column, e.what());
    }
  }
  std::vector<Polynomial<K>> parse_all(const std::vector<Located>& gens, bool lifted = false) const {
    std::vector<Polynomial<K>> out;
    for (const auto& g : gens) out.push_back(parse(g, lifted ? ext : ring, lifted ? ext_names : names));
    return out;
  }
  K scalar(const Located& g) const { return evaluate(parse(g, PolyRing<K>(0, field), {}), {}); }

  TermOrder order(std::size_t k = 0) const {
    if (job.orders.size() <= k) fail(ErrorKind::Argument, "the command needs " + std::to_string(k + 1) + " term orders");
    return order_from_name(job.orders[k]);
  }
  std::size_t variable_index(const std::vector<std::string>& nm) const {
    if (job.variable.empty()) fail(ErrorKind::Argument, "the command needs a 'variable' statement");
    auto it = std::find(nm.begin(), nm.end(), job.variable);
    if (it == nm.end()) fail(ErrorKind::Argument, "unknown variable " + job.variable);
    return static_cast<std::size_t>(it - nm.begin());
  }
};

template <class R>
Json polys(const std::vector<Polynomial<R>>& ps, const NameStack& names) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(format(p, names));
  return a;
}

template <class R>
Json matrix(const PolyMatrix<R>& M, const NameStack& names) {
  Json a = Json::array();
  for (const auto& row : M) a.push_back(polys(row, names));
  return a;
}

inline Json monomial(const Monomial& m, const std::vector<std::string>& names) {
  std::string s = liftings::detail::format_monomial(m, names);
  return s.empty() ? "1" : s;
}

inline Json integers(const std::vector<long long>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

template <class K>
Json parameter_table(const ParametricTemplate<K>& T, const std::vector<std::string>& xnames) {
  Json a = Json::array();
  for (const auto& d : T.params)
    a.push_back({{"name", d.name},
                 {"label", d.label},
                 {"alpha", monomial(d.alpha, xnames)},
                 {"term", monomial(d.term, xnames)},
                 {"weight", d.weight}});
  return a;
}

template <class K>
Json scheme_report(const ParametricTemplate<K>& T, const LiftingSchemeResult<K>& s, const std::vector<std::string>& xnames) {
  auto pn = T.param_names();
  NameStack P{pn}, F{xnames, pn};
  Json j;
  j["parameter_count"] = T.parameter_count();
  j["eliminated_count"] = s.eliminated.size();
  Json fp = Json::array();
  for (auto k : s.free_params) fp.push_back(pn[k]);
  j["free_parameters"] = fp;
  j["h0_generators"] = polys(s.h0_generators, P);
  j["reduced_gb"] = polys(s.reduced_gb, P);
  j["is_affine_space"] = s.is_affine_space;
  j["specialized_family"] = polys(s.specialized_family, F);
  auto el = s.eliminated;
  std::sort(el.begin(), el.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Json e = Json::object();
  for (const auto& [k, img] : el) e[pn[k]] = format(img, P);
  j["eliminated"] = e;
  j["residual_gb"] = polys(s.residual_gb, P);
  j["parameters"] = parameter_table(T, xnames);
  return j;
}

// --- commands ---------------------------------------------------------------

template <class K>
Json run_gb(const Context<K>& c) {
  auto H = c.parse_all(c.job.main_ideal());
  auto ord = c.order();
  auto gb = buchberger(H, ord);
  Json j;
  j["reduced_gb"] = polys(gb.elements, {c.names});
  Json h = Json::array();
  for (const auto& m : gb.heads()) h.push_back(monomial(m, c.names));
  j["initial_ideal"] = h;
  return j;
}

template <class K>
Json run_lift_scheme(const Context<K>& c) {
  auto H = c.parse_all(c.job.main_ideal());
  auto T = build_template(H, c.order());
  H0Options o;
  o.threads = c.job.threads;
  auto s = lifting_scheme(T, o);
  Json j;
  j["H_basis"] = polys(T.H_basis, {c.names});
  Json J = Json::array();
  for (const auto& m : T.J_basis) J.push_back(monomial(m, c.ext_names));
  j["initial_ideal"] = J;
  j["omega"] = integers(T.omega());
  j.update(scheme_report(T, s, c.ext_names));
  return j;
}

template <class K>
Json run_stratum(const Context<K>& c) {
  auto H = c.parse_all(c.job.main_ideal());
  std::vector<Monomial> J;
  for (const auto& g : H) {
    if (!g.is_monomial()) fail(ErrorKind::Argument, "stratum needs a monomial ideal");
    J.push_back(g.terms().front().m);
  }
  std::vector<Monomial> minimal;
  for (std::size_t a = 0; a < J.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < J.size() && !redundant; ++b)
      if (b != a && J[b].divides(J[a]) && (!(J[a] == J[b]) || b < a)) redundant = true;
    if (!redundant) minimal.push_back(J[a]);
  }
  auto S = build_stratum_template<K>(minimal, c.n(), c.order(), c.field);
  H0Options o;
  o.threads = c.job.threads;
  auto gens = compute_stratum_ideal(S, o);
  auto pn = S.param_names();
  Json j;
  Json Jm = Json::array();
  for (const auto& m : S.J_basis) Jm.push_back(monomial(m, c.names));
  j["initial_ideal"] = Jm;
  j["parameter_count"] = S.parameter_count();
  j["stratum_generators"] = polys(gens, {pn});
  // not homogeneous for the standard grading of the parameters
  j["reduced_gb"] =
      gens.empty() ? Json::array() : polys(buchberger(gens, TermOrder::degrevlex(), relaxed_options<K>({})).elements, {pn});
  j["generators"] = polys(S.generators, {c.names, pn});
  j["parameters"] = parameter_table(S, c.names);
  return j;
}

template <class K>
Json run_isom(const Context<K>& c) {
  auto H = c.parse_all(c.job.main_ideal());
  H0Options o;
  o.threads = c.job.threads;
  auto iso = build_isomorphism(H, c.order(0), c.order(1), "C", "D", o);
  auto rep = verify_isomorphism(iso, false);
  auto cn = iso.first.T.param_names(), dn = iso.second.T.param_names();
  Json j;
  j["first"] = scheme_report(iso.first.T, iso.first.scheme, c.ext_names);
  j["second"] = scheme_report(iso.second.T, iso.second.scheme, c.ext_names);
  Json phi = Json::object(), psi = Json::object();
  for (std::size_t k = 0; k < dn.size(); ++k) phi[dn[k]] = format(iso.phi.images[k], {cn});
  for (std::size_t k = 0; k < cn.size(); ++k) psi[cn[k]] = format(iso.psi.images[k], {dn});
  Json free_phi = Json::object();
  for (auto k : iso.second.scheme.free_params) free_phi[dn[k]] = format(iso.phi.images[k], {cn});
  j["phi_free"] = free_phi;
  j["phi"] = phi;
  j["psi"] = psi;
  j["verification"] = {{"phi_maps_ideal", rep.phi_maps_ideal},
                       {"psi_maps_ideal", rep.psi_maps_ideal},
                       {"round_trips", rep.round_trips},
                       {"weights_preserved", rep.weights_preserved}};
  if (!rep.ok()) fail(ErrorKind::TheoremViolation, "isomorphism verification failed");
  return j;
}

template <class K>
std::vector<std::vector<K>> acm_scalars(const Context<K>& c, const std::vector<Polynomial<K>>& H) {
  unsigned need = 1;
  for (const auto& g : buchberger(H, TermOrder::degrevlex()).elements) need = std::max(need, g.degree());
  auto s = default_scalars<K>(c.field, c.n(), need);
  for (const auto& [var, list] : c.job.scalars) {
    auto it = std::find(c.names.begin(), c.names.end(), var);
    if (it == c.names.end()) fail(ErrorKind::Parse, "scalars for unknown variable " + var);
    auto& v = s[static_cast<std::size_t>(it - c.names.begin())];
    v.clear();
    for (const auto& g : list) v.push_back(c.scalar(g));
  }
  return s;
}

template <class K>
Json run_acm_parametric(const Context<K>& c, const std::vector<Polynomial<K>>& H) {
  using PK = Polynomial<K>;
  const auto& pn = c.job.parameters;
  PolyRing<K> pring(pn.size(), c.field);
  unsigned need = 1;
  for (const auto& g : buchberger(H, TermOrder::degrevlex()).elements) need = std::max(need, g.degree());
  std::vector<std::vector<PK>> sc(c.n());
  for (std::size_t i = 0; i < c.n(); ++i)
    for (unsigned k = 0; k < need; ++k) sc[i].push_back(pring.from_integer(k));
  for (const auto& [var, list] : c.job.scalars) {
    auto it = std::find(c.names.begin(), c.names.end(), var);
    if (it == c.names.end()) fail(ErrorKind::Parse, "scalars for unknown variable " + var);
    auto& v = sc[static_cast<std::size_t>(it - c.names.begin())];
    v.clear();
    for (const auto& g : list) v.push_back(c.parse(g, pring, pn));
  }
  PolyRing<PK> xring(c.n(), pring);
  auto L = parametric_lift(H, sc, xring);
  NameStack X{c.names, pn}, XN{c.ext_names, pn};

  // checks in the flattened ring K[params, x, xn], parameters of weight 0
  auto flat = flatten(L.I);
  const auto& R = flat.front().ring();
  std::vector<std::string> fnames = pn;
  fnames.insert(fnames.end(), c.ext_names.begin(), c.ext_names.end());
  std::vector<Polynomial<K>> Hx;
  for (const auto& h : H) {
    std::vector<Term<K>> ts;
    for (const auto& t : h.terms()) {
      Monomial m(R.nvars);
      for (std::size_t i = 0; i < c.n(); ++i) m.set(pn.size() + i, t.m[i]);
      ts.push_back({m, t.c});
    }
    Hx.emplace_back(R, std::move(ts));
  }
  Grading w = flat_grading(pn.size(), c.n() + 1);
  Json j;
  j["parameters"] = pn;
  j["M_j"] = matrix(L.M_j.rows, X);
  j["M_H"] = matrix(L.M_H.rows, X);
  j["N"] = polys(L.N.N, XN);
  j["M_N"] = matrix(L.N.M_N.rows, XN);
  j["M"] = matrix(L.M, XN);
  j["I"] = polys(L.I, XN);
  j["is_lifting"] = lifting_by_definition(flat, Hx, w);
  if (!c.job.components.empty()) {
    std::vector<std::vector<Polynomial<K>>> comps;
    for (const auto& comp : c.job.components) {
      std::vector<Polynomial<K>> cc;
      for (const auto& g : comp) cc.push_back(c.parse(g, R, fnames));
      comps.push_back(std::move(cc));
    }
    j["decomposition_verified"] = verify_radical_against_decomposition(flat, comps, w);
  } else {
    j["decomposition_verified"] = nullptr;
  }
  return j;
}

template <class K>
Json run_acm_lift(const Context<K>& c) {
  auto H = c.parse_all(c.job.main_ideal());
  if (!c.job.parameters.empty()) {
    auto j = run_acm_parametric(c, H);
    if (j["decomposition_verified"] == false) fail(ErrorKind::TheoremViolation, "I is not the given intersection");
    return j;
  }
  auto gc = check_generic_coordinates(H, true, c.job.seed);
  RadicalLiftOptions o;
  o.omega = c.job.weights;
  if (!c.job.t_values.empty()) o.t_values = c.job.t_values;
  auto L = radical_lift(gc.ideal, acm_scalars(c, gc.ideal), o);
  NameStack X{c.names}, XN{c.ext_names}, tX{c.names, {"t"}}, tXN{c.ext_names, {"t"}};
  const auto& chosen = L.specializations[*L.chosen];

  Json j;
  bool moved = false;
  for (std::size_t a = 0; a < c.n(); ++a)
    for (std::size_t b = 0; b < c.n(); ++b) moved = moved || !(gc.change[a][b] == (a == b ? c.field.one() : c.field.zero()));
  if (moved) {
    Json ch = Json::array();
    for (const auto& row : gc.change) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(x.to_string());
      ch.push_back(r);
    }
    j["coordinate_change"] = ch;
  }
  j["G"] = polys(L.G, X);
  Json jm = Json::array();
  for (const auto& m : L.j) jm.push_back(monomial(m, c.names));
  j["initial_ideal"] = jm;
  j["omega"] = integers(L.omega);
  j["M_j"] = matrix(L.M_j.rows, X);
  j["M_H"] = matrix(L.M_H.rows, X);
  j["N"] = polys(L.N.N, XN);
  j["M_N"] = matrix(L.N.M_N.rows, XN);
  auto M = perturbed_matrix(add_last_variable(L.M_H.rows), L.N.M_N.rows, add_last_variable(L.M_j.rows));
  j["M"] = matrix(M, XN);
  j["minors_of_M"] = polys(maximal_minors(M), XN);
  j["H_t"] = polys(L.H_t, tX);
  j["M_t"] = matrix(L.M_t, tXN);
  j["I_t"] = polys(L.I_t, tXN);
  // t as supplied; the field prints residues symmetrically
  auto t_text = [&](const K& t) {
    for (auto tv : o.t_values)
      if (c.field.from_integer(tv) == t) return std::to_string(tv);
    return t.to_string();
  };
  Json sp = Json::array();
  for (const auto& s : L.specializations) {
    Json e;
    e["t"] = t_text(s.t);
    e["deformed_is_lifting"] = s.deformed_is_lifting;
    e["is_lifting"] = s.is_lifting;
    e["I_at_t"] = polys(s.I_t, XN);
    e["lifting"] = polys(s.lifting, XN);
    sp.push_back(e);
  }
  j["specializations"] = sp;
  j["t"] = t_text(chosen.t);
  j["I"] = polys(L.result(), XN);
  j["is_lifting"] = chosen.is_lifting;
  if (!c.job.components.empty()) {
    std::vector<std::vector<Polynomial<K>>> comps;
    for (const auto& comp : c.job.components) comps.push_back(c.parse_all(comp, true));
    bool ok = verify_radical_against_decomposition(L.result(), comps);
    j["decomposition_verified"] = ok;
    if (!ok) fail(ErrorKind::TheoremViolation, "I is not the given intersection");
  } else {
    j["decomposition_verified"] = nullptr;
  }
  return j;
}

template <class K>
Json run_verify_lifting(const Context<K>& c) {
  auto H = c.parse_all(c.job.main_ideal());
  const auto* Ig = c.job.ideal("I");
  if (!Ig) fail(ErrorKind::Argument, "verify_lifting needs an ideal named I in the ring with " + c.job.xn_name());
  auto I = c.parse_all(*Ig, true);
  auto cert = is_lifting(I, H, c.order());
  std::vector<Polynomial<K>> Hx;
  for (const auto& h : H) Hx.push_back(insert_variable(h, c.n()));
  Json j;
  j["is_lifting"] = cert.is_lifting;
  j["by_definition"] = lifting_by_definition(I, Hx);
  j["reason"] = cert.reason;
  j["basis"] = polys(cert.basis, {c.ext_names});
  j["tails"] = polys(cert.tails, {c.ext_names});
  return j;
}

template <class K>
Json run_saturate(const Context<K>& c) {
  auto I = c.parse_all(c.job.main_ideal());
  auto gb = saturate_xn(I, c.order());
  Json j;
  j["variable"] = c.names.back();
  j["saturation"] = polys(gb.elements, {c.names});
  return j;
}

template <class K>
Json run_truncate(const Context<K>& c) {
  if (!c.job.degree) fail(ErrorKind::Argument, "truncate needs a 'degree' statement");
  auto I = c.parse_all(c.job.main_ideal());
  auto G = buchberger(I, c.order()).elements;
  auto T = truncate(G, *c.job.degree);
  Json j;
  j["degree"] = *c.job.degree;
  j["generators"] = polys(T, {c.names});
  j["reduced_gb"] = polys(buchberger(T, c.order()).elements, {c.names});
  return j;
}

template <class K>
Json run_intersect(const Context<K>& c) {
  std::vector<std::vector<Polynomial<K>>> parts;
  if (!c.job.components.empty()) {
    for (const auto& comp : c.job.components) parts.push_back(c.parse_all(comp));
  } else {
    for (const auto& [name, gens] : c.job.ideals) parts.push_back(c.parse_all(gens));
  }
  if (parts.empty()) fail(ErrorKind::Argument, "nothing to intersect");
  auto gb = intersect_all(parts, c.order());
  Json j;
  j["intersection"] = polys(gb.elements, {c.names});
  return j;
}

template <class K>
Json run_discriminant(const Context<K>& c) {
  auto I = c.parse_all(c.job.main_ideal());
  auto v = c.variable_index(c.names);
  Json j;
  j["variable"] = c.names[v];
  j["polynomial"] = format(I.front(), {c.names});
  j["discriminant"] = format(discriminant(I.front(), v), {c.names});
  return j;
}

template <class K>
Json dispatch(const JobSpec& job, typename K::ring_type field) {
  Context<K> c(job, field);
  Json body;
  const auto& cmd = job.command;
  if (cmd == "gb") body = run_gb(c);
  else if (cmd == "lift_scheme") body = run_lift_scheme(c);
  else if (cmd == "stratum") body = run_stratum(c);
  else if (cmd == "isom") body = run_isom(c);
  else if (cmd == "acm_lift") body = run_acm_lift(c);
  else if (cmd == "verify_lifting") body = run_verify_lifting(c);
  else if (cmd == "saturate") body = run_saturate(c);
  else if (cmd == "truncate") body = run_truncate(c);
  else if (cmd == "intersect") body = run_intersect(c);
  else if (cmd == "discriminant") body = run_discriminant(c);
  else fail(ErrorKind::Parse, cmd.empty() ? "no command given" : "unknown command '" + cmd + "'");

  Json j;
  j["schema"] = kSchema;
  j["command"] = cmd;
  j["field"] = job.field_name();
  j["ring"] = job.variables;
  j["lift_variable"] = job.xn_name();
  j["orders"] = job.orders;
  j["seed"] = job.seed;
  j.update(body);
  return j;
}

inline std::string scalar_text(const Json& e) { return e.is_string() ? e.get<std::string>() : e.dump(); }

inline bool flat_array(const Json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
}

// rows of a matrix, integer vectors and short lists go on one line
inline bool inline_array(const Json& v, bool in_array) {
  if (!flat_array(v)) return false;
  if (in_array) return true;
  std::size_t len = 0;
  for (const auto& e : v) len += scalar_text(e).size() + 2;
  return len <= 72;
}

inline void render(std::ostream& os, const Json& j, const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    const bool in_array = j.is_array();
    std::string head = in_array ? indent + "-" : indent + it.key() + ":";
    if (v.is_object()) {
      os << head << "\n";
      render(os, v, indent + "  ");
    } else if (v.is_array() && v.empty()) {
      os << head << " (none)\n";
    } else if (inline_array(v, in_array)) {
      os << head << " ";
      for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << scalar_text(v[k]);
      os << "\n";
    } else if (flat_array(v)) {
      os << head << "\n";
      for (const auto& e : v) os << indent << "  " << scalar_text(e) << "\n";
    } else if (v.is_array()) {
      os << head << "\n";
      render(os, v, indent + "  ");
    } else {
      os << head << " " << scalar_text(v) << "\n";
    }
  }
}

}  // namespace detail

/// Runs a parsed job; errors propagate as liftings::Error.
inline Json run(const JobSpec& job) {
  if (job.characteristic == 0) return detail::dispatch<Rational>(job, RationalField{});
  return detail::dispatch<ModP>(job, PrimeField(job.characteristic));
}

inline std::string text_report(const Json& j) {
  std::ostringstream os;
  detail::render(os, j, "");
  return os.str();
}

/// Comma-separated integers, as given to --t-values.
inline std::vector<long long> parse_integer_list(const std::string& s) {
  Located st{s, 1, 1};
  std::vector<long long> out;
  for (const auto& v : detail::split_list(st, 0)) out.push_back(detail::integer(v));
  return out;
}

}  // namespace liftings::cli
