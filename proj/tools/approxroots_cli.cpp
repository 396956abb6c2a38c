// approxroots: command-line front end. Results are JSON on stdout (DOT for
// `resolve --dot`). Exit status: 0 success, 1 usage or syntax error,
// 2 mathematical failure reported by the library.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "approxroots/adic.hpp"
#include "approxroots/branch.hpp"
#include "approxroots/char_roots.hpp"
#include "approxroots/embedding.hpp"
#include "approxroots/format.hpp"
#include "approxroots/parse.hpp"
#include "approxroots/resolution.hpp"

using json = nlohmann::ordered_json;
using namespace approxroots;

namespace {

json ext(const ExtInt& v) {
  if (v.is_infinite()) return "INFINITY";
  return v.value();
}

json char_json(const CharData& cd) {
  return json{{"B", cd.B}, {"E", cd.E}, {"Nseq", cd.Nseq}, {"Bbar", cd.Bbar}, {"genus", cd.genus}};
}

std::string tpoly(const XPoly& p) { return to_string(p, "T"); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  for (const auto& part : split(text, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(part, &used);
    } catch (const std::exception&) {
      throw CLI::ValidationError("integer list", "'" + part + "' is not an integer");
    }
    if (part.find_first_not_of(" \t", used) != std::string::npos)
      throw CLI::ValidationError("integer list", "'" + part + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

json graph_json(const DualGraph& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices)
    vertices.push_back({{"id", v.id}, {"creationIndex", v.creationIndex}, {"phi", v.phi}, {"mu", v.mu}});
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  json arrows = json::object();
  for (const auto& [label, id] : g.arrowheads) arrows[label] = id;
  return json{{"vertices", vertices},       {"edges", edges},
              {"arrowheads", arrows},       {"horizontal", g.horizontal},
              {"vertical", g.vertical},     {"L", g.L},
              {"multiplicities", g.multiplicity_sequence()}};
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate roots, characteristic data and resolution graphs of plane branches"};
  app.require_subcommand(1);

  std::string curve, param, check, roots_text, P_text, Q_text, b_text, method = "direct";
  long p_root = 0, k = 0, b0 = 0;
  std::size_t prec = 16;
  bool dot = false, with_semiroots = false;
  long gamma = 0;

  auto* approx = app.add_subcommand("approx-root", "approximate p-th root of a monic curve");
  approx->add_option("curve", curve, "polynomial in X, Y")->required();
  approx->add_option("--p", p_root, "root order, dividing deg_Y")->required();
  approx->add_option("--method", method, "direct | iterated | meromorphic")
      ->check(CLI::IsMember({"direct", "iterated", "meromorphic"}));

  auto* chardata = app.add_subcommand("char-data", "characteristic data of a branch");
  chardata->add_option("curve", curve, "monic curve in X, Y");
  chardata->add_option("--param", param, "parameterization \"n; y(T)\"");

  auto* implic = app.add_subcommand("implicitize", "curve of a parameterization or polynomial map");
  implic->add_option("--param", param, "local parameterization \"n; y(T)\"");
  implic->add_option("--P", P_text, "X = P(T)");
  implic->add_option("--Q", Q_text, "Y = Q(T)");

  auto* semi = app.add_subcommand("semiroot", "k-semiroots: build from a parameterization, or test one");
  semi->add_option("--k", k, "index k")->required();
  semi->add_option("--param", param, "parameterization \"n; y(T)\"");
  semi->add_option("--check", check, "candidate semiroot q to test against the curve");
  semi->add_option("curve", curve, "curve f (with --check)");

  auto* expand = app.add_subcommand("expand", "expansion of phi in semiroots");
  expand->add_option("phi", curve, "polynomial to expand")->required();
  auto* roots_opt = expand->add_option("--roots", roots_text, "comma-separated roots q_0, ..., q_G");
  auto* curve_opt = expand->add_option("--curve", check, "curve whose characteristic roots are used");
  roots_opt->excludes(curve_opt);

  auto* resolve_cmd = app.add_subcommand("resolve", "dual graph of the minimal embedded resolution");
  resolve_cmd->add_option("--param", param, "parameterization \"n; y(T)\"")->required();
  resolve_cmd->add_flag("--dot", dot, "emit Graphviz DOT instead of JSON");
  resolve_cmd->add_flag("--semiroots", with_semiroots, "add arrowheads for the truncated semiroots f_0..f_{g-1}");

  auto* invert = app.add_subcommand("invert", "characteristic sequence in other coordinates");
  invert->add_option("--b", b_text, "generic characteristic sequence, e.g. \"2,7\"")->required();
  invert->add_option("--b0", b0, "new first exponent B_0")->required();

  auto* epi = app.add_subcommand("epi-check", "is T -> (P, Q) an embedding of the line?");
  epi->add_option("--P", P_text, "P(T)")->required();
  epi->add_option("--Q", Q_text, "Q(T)")->required();

  auto* merom = app.add_subcommand("merom-char", "characteristic data at infinity of T -> (P, Q)");
  merom->add_option("--P", P_text, "P(T)")->required();
  merom->add_option("--Q", Q_text, "Q(T)")->required();
  merom->add_option("--prec", prec, "exponents of y(tau) known below this order");
  auto* gamma_opt = merom->add_option("--expand", gamma, "also expand this value in the strict generators");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*approx) {
      const YPoly f = parse_curve(curve);
      if (p_root < 1) throw CLI::ValidationError("--p", "must be positive");
      const auto p = static_cast<std::size_t>(p_root);
      YPoly root;
      json extra = json::object();
      if (method == "direct") {
        root = approx_root_direct(f, p);
      } else if (method == "meromorphic") {
        root = approx_root_meromorphic(f, p);
      } else {
        detail::check_root_request(f, p);
        const auto it = approx_root_iterated(f, p, YPoly::monomial(XPoly(Rational(1)), *f.degree() / p));
        root = it.root;
        extra["iterations"] = it.iterations;
      }
      json out{{"curve", to_string(f)}, {"p", p_root}, {"method", method}, {"root", to_string(root)}};
      out.update(extra);
      print(out);
    } else if (*chardata) {
      if (!param.empty() == !curve.empty()) throw CLI::ValidationError("char-data", "give exactly one of a curve or --param");
      if (!param.empty()) {
        const Parameterization p = parse_parameterization(param);
        json out{{"parameterization", {{"n", p.n}, {"y", tpoly(p.y)}}}, {"curve", to_string(implicitize(p))}};
        out.update(char_json(char_sequence(p)));
        print(out);
      } else {
        const YPoly f = parse_curve(curve);
        const RootsReport r = char_approx_roots(f);
        json out{{"curve", to_string(f)}};
        out.update(char_json(r.charData));
        json roots = json::array(), meets = json::array();
        for (const auto& q : r.roots) roots.push_back(to_string(q));
        for (const auto& m : r.intersections) meets.push_back(ext(m));
        out["roots"] = roots;
        out["intersections"] = meets;
        print(out);
      }
    } else if (*implic) {
      if (!param.empty()) {
        const Parameterization p = parse_parameterization(param);
        print(json{{"curve", to_string(implicitize(p))}});
      } else if (!P_text.empty() && !Q_text.empty()) {
        const PolyPair pp{parse_univariate(P_text), parse_univariate(Q_text)};
        print(json{{"curve", to_string(implicit_curve(pp))}});
      } else {
        throw CLI::ValidationError("implicitize", "give --param or both --P and --Q");
      }
    } else if (*semi) {
      if (!check.empty()) {
        if (curve.empty()) throw CLI::ValidationError("semiroot", "--check needs the curve f");
        const YPoly f = parse_curve(curve), q = parse_curve(check);
        json out{{"curve", to_string(f)}, {"q", to_string(q)}, {"k", k}, {"is_semiroot", is_semiroot(f, q, k)}};
        if (!q.is_zero() && q.is_monic()) {
          const auto cd = char_approx_roots(f).charData;
          if (k >= 0 && k <= cd.genus && static_cast<long>(*q.degree()) == cd.degree() / cd.E[static_cast<std::size_t>(k)])
            out["truncation_coincidence"] = truncation_coincidence(f, q, k);
        }
        out["intersection"] = ext(intersection_number(f, q));
        print(out);
      } else if (!param.empty()) {
        const Parameterization p = parse_parameterization(param);
        const Parameterization t = truncated_parameterization(p, k);
        print(json{{"k", k},
                   {"truncation", {{"n", t.n}, {"y", tpoly(t.y)}}},
                   {"semiroot", to_string(truncated_semiroot(p, k))}});
      } else {
        throw CLI::ValidationError("semiroot", "give --param, or --check q with a curve");
      }
    } else if (*expand) {
      const YPoly phi = parse_curve(curve);
      std::vector<YPoly> roots;
      json out{{"phi", to_string(phi)}};
      if (!check.empty()) {
        const YPoly f = parse_curve(check);
        roots = char_approx_roots(f).roots;
        out["intersection"] = ext(intersection_via_expansion(f, phi));
      } else if (!roots_text.empty()) {
        for (const auto& part : split(roots_text, ',')) roots.push_back(parse_curve(part));
      } else {
        throw CLI::ValidationError("expand", "give --roots or --curve");
      }
      json rj = json::array(), terms = json::array();
      for (const auto& q : roots) rj.push_back(to_string(q));
      for (const auto& [digits, c] : semiroot_expand(phi, roots))
        terms.push_back({{"digits", digits}, {"coefficient", to_string(c)}});
      out["roots"] = rj;
      out["terms"] = terms;
      print(out);
    } else if (*resolve_cmd) {
      const Parameterization p = parse_parameterization(param);
      DualGraph g = resolve(p);
      if (with_semiroots) {
        const CharData cd = char_sequence(p);
        for (long i = 0; i < cd.genus; ++i)
          add_arrowhead(g, "f_" + std::to_string(i), attach(g, truncated_parameterization(p, i)));
      }
      if (dot)
        std::cout << to_dot(g);
      else
        print(graph_json(g));
    } else if (*invert) {
      const CharData generic = char_data_from_B(parse_longs(b_text));
      json out{{"generic", generic.B}, {"newB0", b0}};
      out.update(char_json(invert_coordinates(generic, b0)));
      print(out);
    } else if (*epi) {
      const PolyPair pp{parse_univariate(P_text), parse_univariate(Q_text)};
      const auto r = epimorphism_check(pp);
      json out{{"P", tpoly(pp.P)}, {"Q", tpoly(pp.Q)}, {"epimorphism", r.epimorphism}};
      if (r.epimorphism) {
        json steps = json::array();
        for (const auto& s : r.chain.steps) steps.push_back(s.to_string());
        out["chain"] = steps;
      }
      print(out);
    } else if (*merom) {
      const PolyPair pp{parse_univariate(P_text), parse_univariate(Q_text)};
      const MeromParam mp = merom_param_at_infinity(pp, prec);
      json terms = json::array();
      for (long e : mp.y.support())
        if (e < mp.y.known_below()) terms.push_back({{"exponent", e}, {"coefficient", mp.y.coefficient(e).get_str()}});
      json out{{"N", mp.N}, {"y", {{"known_below", mp.y.known_below()}, {"terms", terms}}}};
      const MeromCharData md = merom_char_sequence(mp.N, mp.y);
      out.update(char_json(md));
      if (*gamma_opt) out["expansion"] = {{"gamma", gamma}, {"digits", strict_expand(gamma, md)}};
      print(out);
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    const std::string what = e.what();
    print(json{{"error", what.substr(0, what.find(':'))}, {"message", what}});
    return 2;
  }
  return 0;
}
