#include "table.hpp"

#include "dualg/asymptotics.hpp"
#include "dualg/bijection.hpp"
#include "dualg/json_io.hpp"
#include "dualg/measures.hpp"
#include "dualg/sampling.hpp"
#include "dualg/symfunc.hpp"
#include "dualg/verify.hpp"

#include <CLI11.hpp>

#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

using namespace dualg;
using dualg::cli::Field;
using dualg::cli::Format;
using dualg::cli::Table;

namespace {

constexpr int kUsageError = 2;
constexpr int kVerifyFailed = 1;

// input problems that should exit like a usage error
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "text";
  int decimal = -1;
  std::uint64_t seed = 1;
  int jobs = 1;
  long budget = 50'000'000;

  Format fmt() const {
    if (format == "csv") return Format::csv;
    if (format == "json") return Format::json;
    return Format::text;
  }
  Field rational(const Rational& r) const { return decimal >= 0 ? to_decimal(r, decimal) : to_string(r); }
  ExhaustiveOptions exhaustive() const { return {jobs, budget}; }
};

void add_format(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json", "text"}));
}
void add_decimal(CLI::App* app, Common& c) {
  app->add_option("--decimal", c.decimal, "print exact values rounded to N digits")->check(CLI::NonNegativeNumber);
}
void add_seed(CLI::App* app, Common& c) { app->add_option("--seed", c.seed, "64-bit seed"); }
void add_jobs(CLI::App* app, Common& c) {
  app->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
}
void add_budget(CLI::App* app, Common& c) {
  app->add_option("--budget", c.budget, "cap on enumerated objects")->check(CLI::PositiveNumber);
}

struct BoxArgs {
  int a = 1, b = 1, c = 1;
  BoxDims box() const { return make_box(a, b, c); }
};

void add_box(CLI::App* app, BoxArgs& box) {
  app->add_option("a", box.a, "row length bound")->required()->check(CLI::NonNegativeNumber);
  app->add_option("b", box.b, "number of rows bound")->required()->check(CLI::NonNegativeNumber);
  app->add_option("c", box.c, "entry bound")->required()->check(CLI::NonNegativeNumber);
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string pp_field(const PlanePartition& pi) {
  std::string s;
  for (std::size_t i = 0; i < pi.rows().size(); ++i) s += (i ? "/" : "") + join(pi.rows()[i], " ");
  return s;
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& s : items) out.push_back(parse_rational(s));
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

template <class T, class Fn>
std::vector<T> parallel_map(int count, int jobs, Fn&& fn) {
  std::vector<T> out(static_cast<std::size_t>(count));
  jobs = std::clamp(jobs, 1, std::max(count, 1));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  {
    std::vector<std::jthread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (int r = w; r < count; r += jobs) out[static_cast<std::size_t>(r)] = fn(r);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

Table dist_table(const DistTable& t, const Common& c) {
  Table out{{"outcome", "probability"}, {}};
  for (const auto& e : t.entries()) {
    out.add({t.label(e.outcome), t.exact() ? c.rational(e.exact) : Field{e.value}});
  }
  if (t.exact() ? t.exact_deficit() != 0 : t.deficit() != 0.0) {
    out.add({std::string("rest"), t.exact() ? c.rational(t.exact_deficit()) : Field{t.deficit()}});
  }
  return out;
}

Rational single_q(const std::vector<std::string>& q, int c, std::vector<Rational>& all) {
  all = parse_rationals(q);
  if (all.size() == 1) all.assign(static_cast<std::size_t>(c), all.front());
  if (static_cast<int>(all.size()) != c) throw std::invalid_argument("--q needs 1 or c values");
  return all.front();
}

void write_plot(const std::string& dir, const std::string& name, const Table& t, bool enabled) {
  if (!enabled) return;
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / (name + ".dat");
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  cli::write_plot_data(os, t, name);
  std::cerr << "plot data: " << path.string() << '\n';
}

std::string fixed(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boxed plane partitions, dual Grothendieck measures and last passage percolation"};
  app.require_subcommand(1);
  Common com;
  std::function<int()> action;

  // count
  BoxArgs count_box;
  auto* count = app.add_subcommand("count", "number of plane partitions in the a x b x c box");
  add_box(count, count_box);
  add_format(count, com);
  count->callback([&] {
    action = [&] {
      const BigInt z = macmahon_count(count_box.box());
      if (com.fmt() == Format::text) {
        std::cout << to_string(z) << '\n';
      } else {
        Table t{{"a", "b", "c", "count"}, {}};
        t.add({std::int64_t{count_box.a}, std::int64_t{count_box.b}, std::int64_t{count_box.c}, to_string(z)});
        cli::write_table(std::cout, t, com.fmt());
      }
      return 0;
    };
  });

  // enumerate
  BoxArgs enum_box;
  auto* enumerate = app.add_subcommand("enumerate", "list PP(a,b,c) in lexicographic order");
  add_box(enumerate, enum_box);
  add_format(enumerate, com);
  add_budget(enumerate, com);
  enumerate->callback([&] {
    action = [&] {
      const BoxDims box = enum_box.box();
      if (macmahon_count(box) > com.budget) throw BudgetExceeded("enumerate: box exceeds --budget");
      std::int64_t index = 0;
      if (com.fmt() == Format::text) {
        for_each_pp(box, [&](const PlanePartition& pi) {
          std::cout << "# " << index++ << '\n' << to_text(pi) << '\n';
        });
      } else if (com.fmt() == Format::csv) {
        std::cout << "index,plane_partition\n";
        for_each_pp(box, [&](const PlanePartition& pi) { std::cout << index++ << ',' << pp_field(pi) << '\n'; });
      } else {
        nlohmann::json arr = nlohmann::json::array();
        for_each_pp(box, [&](const PlanePartition& pi) { arr.push_back(to_json(pi)); });
        std::cout << arr.dump() << '\n';
      }
      return 0;
    };
  });

  // map
  auto* map = app.add_subcommand("map", "apply Φ or Φ^{-1} to a file ('-' for stdin)");
  map->require_subcommand(1);
  std::string map_file;
  std::vector<int> frame;
  auto* map_phi = map->add_subcommand("phi", "plane partition text file -> matrix CSV");
  map_phi->add_option("file", map_file, "plane partition: one row per line, space separated")->required();
  map_phi->add_option("--frame", frame, "b,c frame of the output matrix")->delimiter(',')->expected(2);
  add_format(map_phi, com);
  map_phi->callback([&] {
    action = [&] {
      std::istringstream in(read_input(map_file));
      PlanePartition pi;
      try {
        pi = parse_plane_partition(in);
      } catch (const std::invalid_argument& e) {
        throw InputError(map_file + ": " + e.what());
      }
      std::optional<Frame> fr;
      if (!frame.empty()) fr = Frame{frame[0], frame[1]};
      const NMatrix d = phi(pi, fr);
      if (com.fmt() == Format::json) std::cout << to_json(d).dump() << '\n';
      else std::cout << to_csv(d);
      return 0;
    };
  });
  auto* map_inv = map->add_subcommand("phi-inv", "matrix CSV file -> plane partition");
  map_inv->add_option("file", map_file, "matrix: one row per line, comma separated")->required();
  add_format(map_inv, com);
  map_inv->callback([&] {
    action = [&] {
      std::istringstream in(read_input(map_file));
      NMatrix d;
      try {
        d = parse_nmatrix_csv(in);
      } catch (const std::invalid_argument& e) {
        throw InputError(map_file + ": " + e.what());
      }
      const PlanePartition pi = phi_inverse(d);
      if (com.fmt() == Format::json) {
        std::cout << to_json(pi).dump() << '\n';
      } else if (com.fmt() == Format::csv) {
        for (const auto& row : pi.rows()) std::cout << join(row) << '\n';
      } else {
        std::cout << to_text(pi);
      }
      return 0;
    };
  });

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate s_λ, g_λ or the normalized Schur polynomial");
  eval->require_subcommand(1);
  std::vector<int> shape;
  std::vector<std::string> point;
  int ones = 0, big_n = 0;
  auto eval_opts = [&](CLI::App* s) {
    s->add_option("--shape", shape, "partition, e.g. 3,2,2")->delimiter(',')->required();
    s->add_option("--point", point, "rationals, e.g. 1/2,1/3")->delimiter(',');
    add_format(s, com);
    add_decimal(s, com);
  };
  auto emit_value = [&](const std::string& what, const Rational& v) {
    if (com.fmt() == Format::text) {
      std::cout << cli::cell_text(com.rational(v)) << '\n';
    } else {
      Table t{{"function", "shape", "point", "value"}, {}};
      std::string pt;
      for (std::size_t i = 0; i < point.size(); ++i) pt += (i ? "," : "") + point[i];
      t.add({what, join(shape), pt, com.rational(v)});
      cli::write_table(std::cout, t, com.fmt());
    }
    return 0;
  };
  auto* eval_s = eval->add_subcommand("schur", "s_λ(1^ones, x)");
  eval_opts(eval_s);
  eval_s->add_option("--ones", ones, "number of variables set to 1")->check(CLI::NonNegativeNumber);
  eval_s->callback([&] {
    action = [&] { return emit_value("schur", schur_eval(Partition(shape), EvalPoint{ones, parse_rationals(point)})); };
  });
  auto* eval_g = eval->add_subcommand("grothendieck", "g_λ(x)");
  eval_opts(eval_g);
  eval_g->callback([&] {
    action = [&] {
      const auto x = parse_rationals(point);
      return emit_value("grothendieck", grothendieck_eval(Partition(shape), x));
    };
  });
  auto* eval_n = eval->add_subcommand("normalized", "S_λ(x; N) = s_λ(x, 1^{N-k}) / s_λ(1^N)");
  eval_opts(eval_n);
  eval_n->add_option("--n", big_n, "N")->required()->check(CLI::PositiveNumber);
  eval_n->callback([&] {
    action = [&] {
      const auto x = parse_rationals(point);
      return emit_value("normalized", normalized_schur(Partition(shape), x, big_n));
    };
  });

  // dist
  auto* dist = app.add_subcommand("dist", "exact distributions (columns: outcome, probability)");
  dist->require_subcommand(1);
  BoxArgs dist_box;
  std::vector<int> levels;
  int k_slice = 1, gb = 1, gc = 1, max_a = 10;
  std::vector<std::string> qs;
  std::string formula = "ensemble";
  bool exhaustive = false;
  auto dist_common = [&](CLI::App* s) {
    add_format(s, com);
    add_decimal(s, com);
  };
  auto emit_dist = [&](const DistTable& t) {
    cli::write_table(std::cout, dist_table(t, com), com.fmt());
    return 0;
  };

  auto* d_gamma = dist->add_subcommand("gamma", "law of one corner count under the uniform measure");
  add_box(d_gamma, dist_box);
  dist_common(d_gamma);
  int exact_max_n = kExactGammaLawMaxN;
  d_gamma->add_option("--exact-max-n", exact_max_n, "exact rationals while b + c <= N, log-space doubles beyond");
  d_gamma->callback([&] { action = [&] { return emit_dist(gamma_law_table(dist_box.box(), exact_max_n)); }; });

  auto* d_joint_g = dist->add_subcommand("gamma-joint", "exhaustive joint law of corner counts at given levels");
  add_box(d_joint_g, dist_box);
  dist_common(d_joint_g);
  add_jobs(d_joint_g, com);
  add_budget(d_joint_g, com);
  d_joint_g->add_option("--levels", levels, "levels, e.g. 1,2")->delimiter(',')->required();
  d_joint_g->callback([&] {
    action = [&] { return emit_dist(gamma_joint_law(dist_box.box(), levels, com.exhaustive())); };
  });

  auto* d_l1 = dist->add_subcommand("lambda1", "law of λ1 under the g-measure");
  d_l1->add_option("--b", gb, "rows")->required()->check(CLI::PositiveNumber);
  d_l1->add_option("--c", gc, "columns")->required()->check(CLI::PositiveNumber);
  d_l1->add_option("--q", qs, "q or q_1,...,q_c")->delimiter(',')->required();
  d_l1->add_option("--max-a", max_a, "largest value listed; the rest is reported as 'rest'");
  dist_common(d_l1);
  d_l1->callback([&] {
    action = [&] {
      std::vector<Rational> q;
      single_q(qs, gc, q);
      return emit_dist(first_part_law_table(make_gmeasure(gb, gc, q), max_a));
    };
  });

  auto* d_slice = dist->add_subcommand("slice", "law of the right-tile positions on slice k");
  add_box(d_slice, dist_box);
  dist_common(d_slice);
  add_jobs(d_slice, com);
  add_budget(d_slice, com);
  d_slice->add_option("--k", k_slice, "slice index")->required();
  d_slice->add_option("--formula", formula, "ensemble, schur-pair or exhaustive")
      ->check(CLI::IsMember({"ensemble", "schur-pair", "exhaustive"}));
  d_slice->callback([&] {
    action = [&] {
      const SliceFormula f = formula == "ensemble"     ? SliceFormula::ensemble
                             : formula == "schur-pair" ? SliceFormula::schur_pair
                                                       : SliceFormula::exhaustive;
      return emit_dist(slice_law(dist_box.box(), k_slice, f, com.exhaustive()).table);
    };
  });

  auto* d_joint = dist->add_subcommand("joint", "joint law of (Γ_1..Γ_k, Y^(k)): Kostka formula or exhaustive");
  add_box(d_joint, dist_box);
  dist_common(d_joint);
  add_jobs(d_joint, com);
  add_budget(d_joint, com);
  d_joint->add_option("--k", k_slice, "slice index")->required();
  d_joint->add_flag("--exhaustive", exhaustive, "histogram over PP(a,b,c) instead of the formula");
  d_joint->callback([&] {
    action = [&] {
      return emit_dist(exhaustive ? joint_corner_slice_exhaustive(dist_box.box(), k_slice, com.exhaustive())
                                  : joint_corner_slice_law(dist_box.box(), k_slice));
    };
  });

  auto* d_shape = dist->add_subcommand("g-shape", "shape law g_λ(q)/Z of the g-measure");
  d_shape->add_option("--b", gb, "rows")->required()->check(CLI::PositiveNumber);
  d_shape->add_option("--c", gc, "columns")->required()->check(CLI::PositiveNumber);
  d_shape->add_option("--q", qs, "q or q_1,...,q_c")->delimiter(',')->required();
  d_shape->add_option("--max-first", max_a, "largest λ1 listed");
  dist_common(d_shape);
  d_shape->callback([&] {
    action = [&] {
      std::vector<Rational> q;
      single_q(qs, gc, q);
      return emit_dist(g_measure_shape_law(make_gmeasure(gb, gc, q), max_a));
    };
  });

  // sample
  auto* sample = app.add_subcommand("sample", "seeded samples; replicate r uses stream r");
  sample->require_subcommand(1);
  int sb = 1, sc = 1, reps = 1;
  long steps = 10'000;
  double sq = 0.5;
  std::string method = "exhaustive";
  BoxArgs sample_box;
  auto sample_common = [&](CLI::App* s) {
    s->add_option("--count", reps, "number of replicates")->check(CLI::NonNegativeNumber);
    add_seed(s, com);
    add_jobs(s, com);
    add_format(s, com);
  };
  auto frame_opts = [&](CLI::App* s) {
    s->add_option("--b", sb, "rows")->required()->check(CLI::PositiveNumber);
    s->add_option("--c", sc, "columns")->required()->check(CLI::PositiveNumber);
    s->add_option("--q", sq, "geometric parameter in (0,1)")->required();
    sample_common(s);
  };
  auto matrix_rows = [&](bool table) {
    auto mats = parallel_map<std::vector<std::vector<std::int64_t>>>(reps, com.jobs, [&](int r) {
      RngStream rng(com.seed, static_cast<std::uint64_t>(r));
      const auto w = sample_geometric_matrix(sb, sc, sq, rng);
      if (!table) return w.w.to_rows();
      const PerformanceTable g = performance_table(w);
      std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(sb));
      for (int i = 1; i <= sb; ++i)
        for (int j = 1; j <= sc; ++j) rows[static_cast<std::size_t>(i - 1)].push_back(g.at(i, j));
      return rows;
    });
    Table t{{"replicate", "row"}, {}};
    for (int j = 1; j <= sc; ++j) t.header.push_back((table ? "G" : "w") + std::to_string(j));
    for (int r = 0; r < reps; ++r) {
      for (int i = 0; i < sb; ++i) {
        std::vector<Field> row{std::int64_t{r}, std::int64_t{i + 1}};
        for (auto v : mats[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)]) row.emplace_back(v);
        t.add(std::move(row));
      }
    }
    cli::write_table(std::cout, t, com.fmt());
    return 0;
  };
  auto* s_geom = sample->add_subcommand("geom-matrix", "b x c i.i.d. geometric(q) matrices");
  frame_opts(s_geom);
  s_geom->callback([&] { action = [&] { return matrix_rows(false); }; });
  auto* s_cgm = sample->add_subcommand("cgm-table", "performance tables G(i,j) of geometric matrices");
  frame_opts(s_cgm);
  s_cgm->callback([&] { action = [&] { return matrix_rows(true); }; });
  auto emit_pps = [&](const std::vector<PlanePartition>& pps) {
    Table t{{"replicate", "shape", "plane_partition"}, {}};
    for (std::size_t r = 0; r < pps.size(); ++r) {
      t.add({static_cast<std::int64_t>(r), pps[r].shape().to_string(), pp_field(pps[r])});
    }
    cli::write_table(std::cout, t, com.fmt());
    return 0;
  };
  auto* s_g = sample->add_subcommand("g-measure", "Φ^{-1} of a geometric(q) matrix");
  frame_opts(s_g);
  s_g->callback([&] {
    action = [&] {
      return emit_pps(parallel_map<PlanePartition>(reps, com.jobs, [&](int r) {
        RngStream rng(com.seed, static_cast<std::uint64_t>(r));
        return sample_g_measure(sb, sc, sq, rng);
      }));
    };
  });
  auto* s_u = sample->add_subcommand("uniform-pp", "uniform element of PP(a,b,c)");
  add_box(s_u, sample_box);
  sample_common(s_u);
  add_budget(s_u, com);
  s_u->add_option("--method", method, "exhaustive or mcmc")->check(CLI::IsMember({"exhaustive", "mcmc"}));
  s_u->add_option("--steps", steps, "Glauber steps for mcmc");
  s_u->callback([&] {
    action = [&] {
      const BoxDims box = sample_box.box();
      if (method == "exhaustive") {
        const UniformPPSampler sampler(box, com.budget);
        return emit_pps(parallel_map<PlanePartition>(reps, com.jobs, [&](int r) {
          RngStream rng(com.seed, static_cast<std::uint64_t>(r));
          return sampler.draw(rng);
        }));
      }
      return emit_pps(parallel_map<PlanePartition>(reps, com.jobs, [&](int r) {
        RngStream rng(com.seed, static_cast<std::uint64_t>(r));
        return sample_uniform_pp(box, rng, Mcmc{steps});
      }));
    };
  });

  // experiment
  auto* experiment = app.add_subcommand("experiment", "finite-size convergence experiments");
  experiment->require_subcommand(1);
  std::string plot_dir = ".";
  bool no_plot = false;
  std::string what = "ladder";
  std::string xpoint = "1/2";
  std::vector<std::string> ladder_text;
  int max_budget_a = 5000;
  auto plot_opts = [&](CLI::App* s) {
    s->add_option("--plot-dir", plot_dir, "directory for the gnuplot data file");
    s->add_flag("--no-plot", no_plot, "skip the plot data file");
    add_format(s, com);
  };
  auto parse_ladder = [&](Regime r) {
    RegimeSpec spec = default_regime_spec(r);
    if (!ladder_text.empty()) {
      spec.ladder.clear();
      for (const auto& item : ladder_text) {
        std::vector<int> v;
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ':')) v.push_back(std::stoi(part));
        if (v.size() != 3) throw std::invalid_argument("--ladder entries look like a:b:c");
        spec.ladder.push_back(make_box(v[0], v[1], v[2]));
      }
    }
    return spec;
  };
  for (Regime r : {Regime::poisson, Regime::negative_binomial, Regime::gaussian}) {
    auto* s = experiment->add_subcommand(regime_name(r), "single corner law against its " + regime_name(r) + " limit");
    s->add_option("--what", what, "ladder, pointwise or independence")
        ->check(CLI::IsMember({"ladder", "pointwise", "independence"}));
    s->add_option("--ladder", ladder_text, "boxes a:b:c replacing the default ladder")->delimiter(',');
    s->add_option("--x", xpoint, "evaluation point for --what pointwise");
    s->add_option("--max-a", max_budget_a, "largest a allowed");
    plot_opts(s);
    s->callback([&, r] {
      action = [&, r] {
        const RegimeSpec spec = parse_ladder(r);
        Table t;
        if (what == "ladder") {
          const LadderReport rep = regime_ladder(spec, max_budget_a);
          t.header = {"a", "b", "c", "tv", "mean", "var", "limit_mean", "limit_var", "mean_rel_err", "var_rel_err",
                      "cdf_max_dev"};
          for (const auto& g : rep.rungs) {
            t.add({std::int64_t{g.box.a}, std::int64_t{g.box.b}, std::int64_t{g.box.c}, g.tv, g.mean, g.var,
                   g.limit_mean, g.limit_var, g.mean_rel_err, g.var_rel_err, g.cdf_max_dev});
          }
          std::cerr << "threshold " << fixed(spec.threshold) << (rep.within_threshold ? " met" : " missed")
                    << ", increases along ladder: " << rep.increases << '\n';
        } else if (what == "pointwise") {
          t.header = {"a", "b", "c", "value", "limit", "rel_err"};
          for (const auto& g : pointwise_schur_limit(spec, parse_rational(xpoint))) {
            t.add({std::int64_t{g.box.a}, std::int64_t{g.box.b}, std::int64_t{g.box.c}, g.value, g.limit, g.rel_err});
          }
        } else {
          const auto boxes = ladder_text.empty() ? default_probe_ladder(r) : spec.ladder;
          t.header = {"a", "b", "c", "correlation"};
          for (const auto& g : independence_probe(boxes)) {
            t.add({std::int64_t{g.box.a}, std::int64_t{g.box.b}, std::int64_t{g.box.c}, g.correlation});
          }
        }
        cli::write_table(std::cout, t, com.fmt());
        write_plot(plot_dir, regime_name(r) + "-" + what, t, !no_plot);
        return 0;
      };
    });
  }

  double eq = 0.25;
  std::vector<double> xs{1.0};
  int eb = 100, ec = 100, ereps = 20;
  std::string form = "g";
  auto* e_shape = experiment->add_subcommand("limit-shape", "mean G(floor(xb), b)/b against ψ(x)");
  e_shape->add_option("--q", eq, "geometric parameter");
  e_shape->add_option("--x", xs, "x values, e.g. 0.5,1,2")->delimiter(',');
  e_shape->add_option("--b", eb, "columns")->check(CLI::PositiveNumber);
  e_shape->add_option("--reps", ereps, "replicates")->check(CLI::NonNegativeNumber);
  add_seed(e_shape, com);
  add_jobs(e_shape, com);
  plot_opts(e_shape);
  e_shape->callback([&] {
    action = [&] {
      Table t{{"x", "rows", "mean", "se", "psi"}, {}};
      for (const auto& row : limit_shape_experiment(eq, xs, eb, ereps, com.seed, com.jobs)) {
        t.add({row.x, std::int64_t{row.rows}, row.mean, row.se, row.psi});
      }
      cli::write_table(std::cout, t, com.fmt());
      write_plot(plot_dir, "limit-shape", t, !no_plot);
      return 0;
    };
  });
  auto* e_fluct = experiment->add_subcommand("fluctuation", "(G(floor(xb), b) - ψ(x) b) / (σ(x) b^{1/3}) samples");
  e_fluct->add_option("--q", eq, "geometric parameter");
  e_fluct->add_option("--x", xs, "x value")->expected(1);
  e_fluct->add_option("--b", eb, "columns")->check(CLI::PositiveNumber);
  e_fluct->add_option("--reps", ereps, "replicates")->check(CLI::NonNegativeNumber);
  add_seed(e_fluct, com);
  add_jobs(e_fluct, com);
  plot_opts(e_fluct);
  e_fluct->callback([&] {
    action = [&] {
      Table t{{"replicate", "value"}, {}};
      const auto v = fluctuation_samples(eq, xs.front(), eb, ereps, com.seed, com.jobs);
      for (std::size_t r = 0; r < v.size(); ++r) t.add({static_cast<std::int64_t>(r), v[r]});
      cli::write_table(std::cout, t, com.fmt());
      write_plot(plot_dir, "fluctuation", t, !no_plot);
      return 0;
    };
  });
  auto* e_gue = experiment->add_subcommand("gue", "scaled corner values, one row per replicate");
  e_gue->add_option("--q", eq, "geometric parameter");
  e_gue->add_option("--b", eb, "rows")->check(CLI::PositiveNumber);
  e_gue->add_option("--c", ec, "columns")->check(CLI::PositiveNumber);
  e_gue->add_option("--reps", ereps, "replicates")->check(CLI::NonNegativeNumber);
  e_gue->add_option("--form", form, "g (performance table) or lambda (shape of Φ^{-1})")
      ->check(CLI::IsMember({"g", "lambda"}));
  add_seed(e_gue, com);
  add_jobs(e_gue, com);
  plot_opts(e_gue);
  e_gue->callback([&] {
    action = [&] {
      const auto m = gue_corner_samples(eb, ec, eq, ereps, com.seed, form == "g" ? CornerForm::g_table : CornerForm::lambda,
                                        com.jobs);
      Table t{{"replicate"}, {}};
      for (int k = 1; k <= eb; ++k) t.header.push_back((form == "g" ? "G" : "lambda") + std::to_string(k));
      for (std::size_t r = 0; r < m.size(); ++r) {
        std::vector<Field> row{static_cast<std::int64_t>(r)};
        for (double v : m[r]) row.emplace_back(v);
        t.add(std::move(row));
      }
      cli::write_table(std::cout, t, com.fmt());
      write_plot(plot_dir, "gue-" + form, t, !no_plot);
      return 0;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "run invariant suites (all) or the acceptance criteria (acceptance)");
  std::vector<std::string> suites;
  verify->add_option("suite", suites, "suite names, 'all' or 'acceptance'");
  add_seed(verify, com);
  add_jobs(verify, com);
  verify->callback([&] {
    action = [&] {
      VerifyOptions opt{com.seed, com.jobs};
      if (verify->count("--seed") == 0) opt.seed = VerifyOptions{}.seed;
      if (suites.empty()) suites = {"all"};
      std::vector<CheckResult> results;
      auto report = [&](const CheckResult& r) {
        std::cout << format_result(r) << std::endl;
        results.push_back(r);
      };
      for (const auto& s : suites) {
        if (s == "acceptance") {
          for (int k = 1; k <= kAcceptanceCriteria; ++k) report(run_acceptance(k, opt));
        } else if (s == "all") {
          for (const auto& name : invariant_suites())
            for (const auto& r : run_invariant_suite(name, opt)) report(r);
        } else {
          for (const auto& r : run_invariant_suite(s, opt)) report(r);
        }
      }
      const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
      std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " checks passed\n";
      return failed == 0 ? 0 : kVerifyFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }
  try {
    return action ? action() : kUsageError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --budget)\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
