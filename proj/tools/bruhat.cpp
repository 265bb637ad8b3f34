// bruhat: command-line access to the alcove model, intervals, KL
// polynomials, classification sweeps and SVG pictures.
//
// Exit status: 0 success, 1 counterexample found, 2 usage or input error.

#include "bruhat/a2.hpp"
#include "bruhat/classify.hpp"
#include "bruhat/coxeter.hpp"
#include "bruhat/kl.hpp"
#include "bruhat/render.hpp"
#include "bruhat/translations.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace bruhat;

namespace {

constexpr const char* kSchema = "bruhat/1";

struct Common {
  std::string format = "json";
  std::string out;
  int jobs = 0;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", c.out, "Write output to a file instead of stdout");
  sub->add_option("--jobs", c.jobs, "Worker threads (0: all cores)");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + c.out);
  f << text;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

json pt_json(Pt p) { return json::array({p.u, p.v}); }

json elt_json(a2::Elt z) {
  return {{"word", a2::word_string(z)}, {"center", pt_json(z)}, {"length", a2::length(z)},
          {"class", a2::describe(a2::normal_form(z))}};
}

json report_json(const SweepReport& r) {
  json ce = json::array();
  for (const auto& c : r.counterexamples) ce.push_back({{"first", c.first}, {"second", c.second}, {"reason", c.reason}});
  return {{"schema", kSchema},       {"sweep", r.sweep},         {"group", r.group},
          {"max_len_x", r.max_len_x}, {"max_len_xy", r.max_len_xy}, {"intervals", r.intervals},
          {"pairs", r.pairs},         {"isomorphic", r.isomorphic}, {"counterexamples", ce},
          {"notes", r.notes},         {"ok", r.ok()}};
}

std::string report_csv(const SweepReport& r) {
  std::ostringstream os;
  os << "sweep,group,max_len_x,max_len_xy,intervals,pairs,isomorphic,counterexamples\n"
     << r.sweep << ',' << r.group << ',' << r.max_len_x << ',' << r.max_len_xy << ',' << r.intervals << ','
     << r.pairs << ',' << r.isomorphic << ',' << r.counterexamples.size() << '\n';
  if (!r.counterexamples.empty()) {
    os << "first,second,reason\n";
    for (const auto& c : r.counterexamples)
      os << csv_field(c.first) << ',' << csv_field(c.second) << ',' << csv_field(c.reason) << '\n';
  }
  return os.str();
}

bool is_a2(const GroupSpec& g) { return g.family() == Family::A && g.rank() == 2; }

// Element from --x / --x-theta / --x-theta-s / --x-k style options.
struct EltOpt {
  std::string text;
  std::vector<Int> theta, theta_s;
  Int k = -1;

  void add(CLI::App* sub, const std::string& name) {
    sub->add_option("--" + name, text, "Element: word or 'theta m n', 'theta-s m n', 'x k'");
    sub->add_option("--" + name + "-theta", theta, "theta(m,n)")->expected(2);
    sub->add_option("--" + name + "-theta-s", theta_s, "theta^s(m,n)")->expected(2);
    sub->add_option("--" + name + "-k", k, "x_k");
  }
  bool given() const { return !text.empty() || !theta.empty() || !theta_s.empty() || k >= 0; }
  a2::Elt a2() const {
    if (!theta.empty()) return a2::theta(theta[0], theta[1]);
    if (!theta_s.empty()) return a2::theta_s(theta_s[0], theta_s[1]);
    if (k >= 0) return a2::x(k);
    if (text.empty()) throw std::invalid_argument("missing element");
    return a2::parse_element(text);
  }
};

std::string cache_path(const std::string& explicit_path, const GroupSpec& g, int len) {
  if (!explicit_path.empty()) return explicit_path;
  if (const char* dir = std::getenv("BRUHAT_CACHE_DIR"))
    return (std::filesystem::path(dir) / (g.name() + "-L" + std::to_string(len) + ".ball")).string();
  return {};
}

Ball cached_ball(const GroupSpec& g, int len, const std::string& explicit_path) {
  const std::string path = cache_path(explicit_path, g, len);
  if (!path.empty() && std::filesystem::exists(path)) {
    Ball b = Ball::load(path);
    if (b.spec().name() == g.name() && b.max_len() == len) return b;
  }
  Ball b(g, len);
  if (!path.empty()) b.save(path);
  return b;
}

// ------------------------------------------------------------ subcommands

int run_ball(const Common& c, const std::string& group, int max_len, const std::string& cache) {
  const GroupSpec g = GroupSpec::parse(group);
  const Ball b = cached_ball(g, max_len, cache);
  const bool a2d = is_a2(g);
  if (c.format == "csv") {
    std::ostringstream os;
    os << "index,length,word,dominant\n";
    for (std::size_t i = 0; i < b.size(); ++i)
      os << i << ',' << b.length(i) << ',' << b.word_string(i, a2d) << ',' << in_dominant_chamber(g, b.elt(i)) << '\n';
    emit(c, os.str());
    return 0;
  }
  json els = json::array();
  for (std::size_t i = 0; i < b.size(); ++i)
    els.push_back({{"index", i}, {"length", b.length(i)}, {"word", b.word_string(i, a2d)},
                   {"dominant", in_dominant_chamber(g, b.elt(i))}});
  json j = {{"schema", kSchema}, {"group", g.name()}, {"max_len", max_len}, {"size", b.size()}, {"elements", els}};
  emit(c, j.dump(2) + "\n");
  return 0;
}

int run_interval_a2(const Common& c, a2::Elt x, a2::Elt y) {
  std::vector<a2::Elt> elems;
  const IntervalPoset p = a2::interval_poset(x, y, &elems);
  if (c.format == "csv") {
    std::ostringstream os;
    os << "index,word,u,v,length\n";
    for (std::size_t i = 0; i < elems.size(); ++i)
      os << i << ',' << a2::word_string(elems[i]) << ',' << elems[i].u << ',' << elems[i].v << ','
         << a2::length(elems[i]) << '\n';
    emit(c, os.str());
    return 0;
  }
  json els = json::array(), covers = json::array();
  for (auto z : elems) els.push_back(elt_json(z));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int u : p.up[i]) covers.push_back(json::array({i, u}));
  json j = {{"schema", kSchema}, {"group", "A2aff"}, {"x", elt_json(x)}, {"y", elt_json(y)},
            {"length", a2::length(y) - a2::length(x)}, {"size", elems.size()}, {"lc", p.lc()},
            {"full", a2::is_full(x, y)}};
  if (a2::is_dominant(x) && a2::is_dominant(y)) {
    json poly = json::array();
    const Polygon pg = a2::pgn(x, y);
    for (Pt v : pg.vertices()) poly.push_back(pt_json(v));
    j["thick"] = a2::is_thick(x, y);
    j["shape"] = a2::name(a2::interval_type(x, y).shape);
    j["pgn"] = poly;
  }
  j["elements"] = els;
  j["covers"] = covers;
  emit(c, j.dump(2) + "\n");
  return 0;
}

int run_interval_generic(const Common& c, const GroupSpec& g, const std::string& xs, const std::string& ys) {
  const Word wx = parse_word(xs, g.generators()), wy = parse_word(ys, g.generators());
  const int len = geometric_length(g, eval_word(g, wy));
  const Ball b(g, std::max(len, 1));
  const int x = b.index_of_word(wx), y = b.index_of_word(wy);
  const auto elems = b.interval_elements(x, y);
  const IntervalPoset p = b.interval(x, y);
  if (c.format == "csv") {
    std::ostringstream os;
    os << "index,word,length\n";
    for (std::size_t i = 0; i < elems.size(); ++i) os << i << ',' << b.word_string(elems[i]) << ',' << b.length(elems[i]) << '\n';
    emit(c, os.str());
    return 0;
  }
  json els = json::array(), covers = json::array();
  for (int e : elems) els.push_back({{"word", b.word_string(e)}, {"length", b.length(e)}});
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int u : p.up[i]) covers.push_back(json::array({i, u}));
  json j = {{"schema", kSchema}, {"group", g.name()},  {"x", b.word_string(x)},  {"y", b.word_string(y)},
            {"length", b.length(y) - b.length(x)}, {"size", elems.size()}, {"lc", p.lc()},
            {"full", b.is_full(x, y)}, {"elements", els}, {"covers", covers}};
  emit(c, j.dump(2) + "\n");
  return 0;
}

int run_kl(const Common& c, a2::Elt x, a2::Elt y) {
  a2::KlResult r;
  try {
    r = a2::kl(x, y);
  } catch (const a2::UndefinedPairError&) {
    a2::KlOracle oracle(a2::length(y));
    r = a2::kl(x, y, &oracle);
  }
  if (c.format == "csv") {
    std::ostringstream os;
    os << "x,y,source,polynomial\n"
       << a2::word_string(x) << ',' << a2::word_string(y) << ',' << a2::name(r.source) << ',' << csv_field(r.p.str()) << '\n';
    emit(c, os.str());
    return 0;
  }
  json j = {{"schema", kSchema}, {"x", elt_json(x)},          {"y", elt_json(y)},
            {"coefficients", r.p.c}, {"polynomial", r.p.str()}, {"source", a2::name(r.source)}};
  emit(c, j.dump(2) + "\n");
  return 0;
}

int emit_report(const Common& c, const SweepReport& r) {
  emit(c, c.format == "csv" ? report_csv(r) : report_json(r).dump(2) + "\n");
  return r.ok() ? 0 : 1;
}

int run_insight(const Common& c, int lx, int lxy) {
  const auto r = a2::insight_f_census(lx, lxy, c.jobs);
  if (c.format == "csv") {
    std::ostringstream os;
    os << "intervals,pairs,isomorphic,dihedral_agree,fix_agree,complement_false\n"
       << r.intervals << ',' << r.pairs << ',' << r.lhs_true << ',' << r.rhs_agree << ',' << r.fix_agree << ','
       << r.complement_false << '\n';
    emit(c, os.str());
    return 0;
  }
  json d = json::array();
  for (const auto& e : r.disagreements) d.push_back({{"first", e.first}, {"second", e.second}, {"reason", e.reason}});
  json j = {{"schema", kSchema},
            {"sweep", "insight-f"},
            {"max_len_x", lx},
            {"max_len_xy", lxy},
            {"intervals", r.intervals},
            {"pairs", r.pairs},
            {"isomorphic", r.lhs_true},
            {"dihedral_agree", r.rhs_agree},
            {"fix_agree", r.fix_agree},
            {"complement_false", r.complement_false},
            {"note", "W \\ (>= x) not inside [id, y] evaluated literally on the ball of radius l(y)+1"},
            {"disagreements", d}};
  emit(c, j.dump(2) + "\n");
  return 0;  // a census, nothing is asserted
}

int run_stabilize_a2(const Common& c, a2::Elt x, a2::Elt y, const std::vector<Int>& lam, int n_max) {
  if (lam.size() != 2 || lam[0] < 0 || lam[1] < 0) throw std::invalid_argument("--lambda takes two nonnegative integers");
  const a2::Weight w{lam[0], lam[1]};
  const auto n0 = a2::stabilization_find_n0(x, y, w, n_max);
  json j = {{"schema", kSchema}, {"group", "A2aff"}, {"x", elt_json(x)}, {"y", elt_json(y)},
            {"lambda", json::array({lam[0], lam[1]})}, {"n_max", n_max}};
  j["n0"] = n0 ? json(*n0) : json(nullptr);
  if (c.format == "csv")
    emit(c, "x,y,lambda,n0\n" + a2::word_string(x) + ',' + a2::word_string(y) + ',' + a2::to_string(w) + ',' +
                (n0 ? std::to_string(*n0) : std::string()) + '\n');
  else
    emit(c, j.dump(2) + "\n");
  return n0 ? 0 : 1;
}

int run_stabilize_generic(const Common& c, const GroupSpec& g, const std::string& xs, const std::string& ys,
                          const std::vector<Int>& lam, int n_max, int max_len) {
  if (static_cast<int>(lam.size()) != g.rank()) throw std::invalid_argument("--lambda needs one entry per simple root");
  Coweight l{};
  for (int i = 0; i < g.rank(); ++i) l[i] = lam[i];
  const Ball b(g, max_len);
  const AlcoveTranslations tr(b);
  const int x = b.index_of_word(parse_word(xs, g.generators())), y = b.index_of_word(parse_word(ys, g.generators()));
  if (x < 0 || y < 0) throw std::invalid_argument("endpoint outside the ball");
  const auto n0 = stabilization_find_n0(tr, x, y, l, n_max);
  json j = {{"schema", kSchema}, {"group", g.name()}, {"x", b.word_string(x)}, {"y", b.word_string(y)},
            {"lambda", lam}, {"n_max", n_max}};
  j["n0"] = n0 ? json(*n0) : json(nullptr);
  emit(c, j.dump(2) + "\n");
  return n0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat intervals of affine Weyl groups"};
  app.require_subcommand(1);
  Common c;

  std::string group = "A2aff", cache;
  int max_len = 0, len_x = -1, len_xy = 6, n_max = 10;
  EltOpt ex, ey;
  std::vector<Int> lambda;

  auto* ball = app.add_subcommand("ball", "Enumerate the elements of length <= max-len");
  ball->add_option("--group", group, "Group type (A2aff, A3, B2, C2, G2, ...)");
  ball->add_option("--max-len", max_len, "Length bound")->required();
  ball->add_option("--cache", cache, "Ball cache file (read if present, else written)");
  add_common(ball, c);

  auto* interval = app.add_subcommand("interval", "Elements and covers of [x, y]");
  interval->add_option("--group", group, "Group type");
  ex.add(interval, "x");
  ey.add(interval, "y");
  add_common(interval, c);

  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{x,y} in type A2");
  ex.add(kl, "x");
  ey.add(kl, "y");
  add_common(kl, c);

  std::string sweep = "thick";
  auto* classify = app.add_subcommand("classify", "Classification sweeps");
  classify->add_option("--sweep", sweep, "thick, lower, insight or conjecture-e")
      ->check(CLI::IsMember({"thick", "lower", "insight", "conjecture-e"}));
  classify->add_option("--group", group, "Group type for conjecture-e");
  classify->add_option("--max-len", len_x, "Bound on l(x) (l(u) for lower)");
  classify->add_option("--len-xy", len_xy, "Bound on l(x,y)");
  add_common(classify, c);

  std::string type = "A2";
  auto* table1 = app.add_subcommand("verify-table1", "Endpoint-translation conjecture on full dominant intervals");
  table1->add_option("--type", type, "Group type");
  table1->add_option("--len-xy", len_xy, "Bound on l(x,y)");
  table1->add_option("--len-x", len_x, "Bound on l(x)");
  add_common(table1, c);

  auto* stabilize = app.add_subcommand("stabilize", "Least N0 with stable translates [x + N l, y + N l]");
  stabilize->add_option("--group", group, "Group type");
  ex.add(stabilize, "x");
  ey.add(stabilize, "y");
  stabilize->add_option("--lambda", lambda, "Dominant coweight in fundamental coordinates")->required();
  stabilize->add_option("--n-max", n_max, "Largest N0 tried");
  stabilize->add_option("--max-len", max_len, "Ball radius (groups other than A2)");
  add_common(stabilize, c);

  std::string star, lower;
  std::vector<std::string> draw_interval;
  bool zones = false;
  auto* draw = app.add_subcommand("draw", "SVG picture of the A2 tiling");
  draw->add_option("--star", star, "St(x)");
  draw->add_option("--lower", lower, "[id, y] and C_y");
  draw->add_option("--interval", draw_interval, "x y")->expected(2);
  draw->add_flag("--zones", zones, "The six zones");
  add_common(draw, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*ball) return run_ball(c, group, max_len, cache);
    if (*interval) {
      const GroupSpec g = GroupSpec::parse(group);
      if (!ex.given() || !ey.given()) throw std::invalid_argument("interval needs x and y");
      if (is_a2(g)) return run_interval_a2(c, ex.a2(), ey.a2());
      return run_interval_generic(c, g, ex.text, ey.text);
    }
    if (*kl) return run_kl(c, ex.a2(), ey.a2());
    if (*classify) {
      if (sweep == "thick") return emit_report(c, a2::thick_census(len_x < 0 ? 14 : len_x, len_xy, c.jobs));
      if (sweep == "lower") return emit_report(c, a2::lower_classification_sweep(len_x < 0 ? 10 : len_x, c.jobs));
      if (sweep == "insight") return run_insight(c, len_x < 0 ? 12 : len_x, len_xy);
      return emit_report(c, conjecture_e_sweep(GroupSpec::parse(group), len_x < 0 ? 10 : len_x, len_xy, c.jobs));
    }
    if (*table1) {
      const GroupSpec g = GroupSpec::parse(type);
      const int lx = len_x >= 0 ? len_x : (g.family() == Family::A && g.rank() == 3 ? 8 : 10);
      return emit_report(c, conjecture_e_sweep(g, lx, len_xy, c.jobs));
    }
    if (*stabilize) {
      const GroupSpec g = GroupSpec::parse(group);
      if (is_a2(g)) return run_stabilize_a2(c, ex.a2(), ey.a2(), lambda, n_max);
      if (max_len <= 0) throw std::invalid_argument("--max-len is required outside A2");
      return run_stabilize_generic(c, g, ex.text, ey.text, lambda, n_max, max_len);
    }
    if (*draw) {
      render::Scene s;
      if (!star.empty())
        s = render::star_scene(a2::parse_element(star));
      else if (!lower.empty())
        s = render::lower_scene(a2::parse_element(lower));
      else if (!draw_interval.empty())
        s = render::interval_scene(a2::parse_element(draw_interval[0]), a2::parse_element(draw_interval[1]));
      else if (zones)
        s = render::zones_scene();
      else
        throw std::invalid_argument("draw needs --star, --lower, --interval or --zones");
      emit(c, render::render_svg(s));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
