#include <CLI11.hpp>
#include <json.hpp>

#include <twh/twh.hpp>

#include <functional>
#include <iostream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace twh;

namespace {

json rational_json(const Rational& r) {
  return json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

json partition_json(const Partition& p) {
  json arr = json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

int run_hurwitz(int m, const std::string& lambda_text, const std::string& method,
                long long max_work, int threads) {
  Partition lam = Partition::parse(lambda_text);
  EnumerateOptions opts;
  opts.max_work = max_work;
  opts.threads = threads;
  std::vector<std::pair<std::string, Rational>> results;
  if (method == "enumerate" || method == "all")
    results.emplace_back("enumerate", hurwitz_enumerated(m, lam, opts));
  if (method == "cutjoin" || method == "all")
    results.emplace_back("cutjoin", hurwitz_by_cutjoin(m, lam));
  if (method == "zonal" || method == "all")
    results.emplace_back("zonal", hurwitz_by_zonal(m, lam));
  for (const auto& [name, value] : results)
    std::cout << "h(m=" << m << ", lambda=[" << lam.to_string() << "]) " << name << " = "
              << format_rational(value) << "\n";
  if (method == "all") {
    bool agree = results[1].second == results[0].second && results[2].second == results[0].second;
    std::cout << (agree ? "AGREE" : "MISMATCH") << "\n";
    return agree ? 0 : 1;
  }
  return 0;
}

int run_table(int n_max, int m_max, const std::string& format) {
  auto rows = generating_table(n_max, m_max);
  if (format == "text") {
    for (const auto& r : rows)
      std::cout << "n=" << r.n << " m=" << r.m << " lambda=[" << r.lambda.to_string()
                << "] h=" << format_rational(r.value) << "\n";
  } else {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back(json{{"n", r.n},
                         {"m", r.m},
                         {"lambda", partition_json(r.lambda)},
                         {"value", rational_json(r.value)}});
    std::cout << arr.dump(2) << "\n";
  }
  return 0;
}

void print_jack(const std::string& label, const JackPolynomial& j) {
  std::cout << label << " = " << j.expansion.to_string() << "\n"
            << "eigenvalue = " << format_rational(j.eigenvalue) << "\n"
            << "hook_product = " << format_rational(j.hook_product) << "\n"
            << "hook_product_prime = " << format_rational(j.hook_product_prime) << "\n";
}

int run_jack(const std::string& lambda_text, const std::string& alpha_text) {
  Partition lam = Partition::parse(lambda_text);
  Rational alpha = parse_rational(alpha_text);
  print_jack("J[" + lam.to_string() + "] alpha=" + format_rational(alpha),
             jack_polynomial(lam, alpha));
  return 0;
}

int run_zonal(const std::string& lambda_text) {
  Partition lam = Partition::parse(lambda_text);
  print_jack("Z[" + lam.to_string() + "]", zonal(lam));
  return 0;
}

int run_surface(int n, const std::string& word) {
  RibbonDecomposition rd = parse_word(word, n);
  SurfaceReport rep = analyze(rd);
  json out;
  out["n"] = rep.n;
  out["m"] = rep.m;
  out["word"] = word_to_string(rd);
  json xis = json::array();
  for (const auto& t : xi(rd))
    xis.push_back("(" + std::to_string(t.a) + " " + std::to_string(t.b) + ")");
  out["xi"] = xis;
  out["cover_boundary_permutation"] = boundary_permutation_cover(rd).cycle_string();
  out["boundary_type"] = partition_json(rep.boundary_type);
  out["cover_boundary_type"] = partition_json(rep.cover_boundary_type);
  json comps = json::array();
  for (const auto& c : rep.components) {
    json disks = json::array();
    for (int d : c.disks) disks.push_back(d);
    comps.push_back(json{{"disks", disks},
                         {"euler_characteristic", c.euler_characteristic},
                         {"orientable", c.orientable},
                         {"boundary", partition_json(c.boundary)},
                         {"classification", c.classification}});
  }
  out["components"] = comps;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_matrix(int n) {
  bool ok = true;
  auto lams = partitions_of(n);
  for (const auto& lam : lams)
    for (const auto& mu : lams) {
      Rational f = cj_matrix_element_formula(lam, mu);
      Rational d = cj_matrix_element_direct(lam, mu);
      if (f != d) ok = false;
      if (f != 0 || d != 0)
        std::cout << "CJ[" << lam.to_string() << " -> " << mu.to_string()
                  << "] formula=" << format_rational(f) << " direct=" << format_rational(d)
                  << "\n";
    }
  std::cout << (ok ? "MATCH" : "MISMATCH") << "\n";
  return ok ? 0 : 1;
}

int run_selfcheck(const std::string& level) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
    if (ok) {
      std::cout << "ok " << name << "\n";
    } else {
      std::cout << "FAIL " << name << (detail.empty() ? "" : " (" + detail + ")") << "\n";
      ++failures;
    }
  };
  auto p = [](const Partition& lam, const Rational& c) { return PSeries::monomial(lam, c); };

  // zonal expansions and hook products through weight 3
  struct ZonalRow {
    Partition lam;
    PSeries expansion;
    long long hooks;
  };
  std::vector<ZonalRow> zonal_rows = {
      {Partition{1}, p(Partition{1}, 1), 2},
      {Partition{1, 1}, p(Partition{1, 1}, 1) + p(Partition{2}, -1), 12},
      {Partition{2}, p(Partition{1, 1}, 1) + p(Partition{2}, 2), 24},
      {Partition{1, 1, 1},
       p(Partition{1, 1, 1}, 1) + p(Partition{2, 1}, -3) + p(Partition{3}, 2), 144},
      {Partition{2, 1}, p(Partition{1, 1, 1}, 1) + p(Partition{2, 1}, 1) + p(Partition{3}, -2),
       80},
      {Partition{3}, p(Partition{1, 1, 1}, 1) + p(Partition{2, 1}, 6) + p(Partition{3}, 8), 720},
  };
  for (const auto& row : zonal_rows) {
    JackPolynomial z = zonal(row.lam);
    check("zonal[" + row.lam.to_string() + "] expansion", z.expansion == row.expansion,
          "got " + z.expansion.to_string());
    check("zonal[" + row.lam.to_string() + "] hook product",
          z.hook_product * z.hook_product_prime == row.hooks,
          "got " + format_rational(z.hook_product * z.hook_product_prime));
  }

  // reference twisted Hurwitz numbers by all three models
  struct HRow {
    int m;
    Partition lam;
    long long value;
  };
  std::vector<HRow> h_rows = {{1, Partition{2}, 2},       {1, Partition{2, 1}, 2},
                              {2, Partition{1, 1}, 4},    {2, Partition{2}, 4},
                              {2, Partition{1, 1, 1}, 4}, {2, Partition{2, 1}, 4},
                              {2, Partition{3}, 16}};
  for (const auto& row : h_rows) {
    std::string tag = "h(m=" + std::to_string(row.m) + ", lambda=[" + row.lam.to_string() + "])";
    check(tag + " enumerate", hurwitz_enumerated(row.m, row.lam) == row.value);
    check(tag + " cutjoin", hurwitz_by_cutjoin(row.m, row.lam) == row.value);
    check(tag + " zonal", hurwitz_by_zonal(row.m, row.lam) == row.value);
  }

  // Moebius band word
  RibbonDecomposition moebius = parse_word("G[1,2]^{++};G[2,3]^{++};G[1,3]^{+-}", 3);
  SurfaceReport rep = analyze(moebius);
  check("moebius components", rep.components.size() == 1);
  if (rep.components.size() == 1) {
    check("moebius euler characteristic", rep.components[0].euler_characteristic == 0);
    check("moebius non-orientable", !rep.components[0].orientable);
    check("moebius classification",
          rep.components[0].classification == "1 cross-cap, 1 boundary circle",
          rep.components[0].classification);
  }
  check("moebius boundary type", rep.boundary_type == Partition{3});
  check("moebius cover boundary type", rep.cover_boundary_type == Partition{3, 3});

  if (level == "full") {
    for (int n = 1; n <= 4; ++n)
      for (int m = 0; m <= 3; ++m) {
        auto counts = enumerate_hurwitz(n, m);
        for (const auto& lam : partitions_of(n)) {
          Rational en = counts.values().count(lam) ? counts.values().at(lam) : Rational(0);
          Rational cj = hurwitz_by_cutjoin(m, lam);
          Rational zn = hurwitz_by_zonal(m, lam);
          check("cross-model h(m=" + std::to_string(m) + ", lambda=[" + lam.to_string() + "])",
                en == cj && cj == zn,
                format_rational(en) + " / " + format_rational(cj) + " / " + format_rational(zn));
        }
      }
    for (int n = 0; n <= 5; ++n)
      for (const Rational& alpha : {Rational(1), Rational(2)})
        check("cauchy n=" + std::to_string(n) + " alpha=" + format_rational(alpha),
              verify_cauchy(n, alpha));
  }

  if (failures) {
    std::cout << "selfcheck: " << failures << " failure(s)\n";
    return 1;
  }
  std::cout << "selfcheck: all passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted Hurwitz numbers: enumeration, cut-and-join, zonal closed form, and "
               "ribbon-decomposition surgery"};
  app.require_subcommand(1);

  int m = 0, n = 0, n_max = 0, m_max = 0, threads = 1;
  long long max_work = 1'000'000'000;
  std::string lambda_text, alpha_text = "2", method = "all", format = "text", word,
              level = "quick";

  auto* hurwitz = app.add_subcommand("hurwitz", "compute h~_{m,lambda} by one or all models");
  hurwitz->add_option("--m", m, "number of transpositions")->required();
  hurwitz->add_option("--lambda", lambda_text, "partition, e.g. 2,1")->required();
  hurwitz->add_option("--method", method, "enumerate|cutjoin|zonal|all")
      ->check(CLI::IsMember({"enumerate", "cutjoin", "zonal", "all"}));
  hurwitz->add_option("--max-work", max_work, "enumeration budget (products)");
  hurwitz->add_option("--threads", threads, "enumeration threads");

  auto* table = app.add_subcommand("table", "emit the h~_{m,lambda} grid");
  table->add_option("--n-max", n_max, "largest weight")->required();
  table->add_option("--m-max", m_max, "largest transposition count")->required();
  table->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  auto* jack = app.add_subcommand("jack", "Jack polynomial in power sums");
  jack->add_option("--lambda", lambda_text, "partition")->required();
  jack->add_option("--alpha", alpha_text, "Jack parameter as p/q");

  auto* zonal_cmd = app.add_subcommand("zonal", "zonal polynomial in power sums");
  zonal_cmd->add_option("--lambda", lambda_text, "partition")->required();

  auto* surface = app.add_subcommand("surface", "analyze a ribbon gluing word");
  surface->add_option("--n", n, "number of disks")->required();
  surface->add_option("--word", word, "semicolon-separated gluings G[i,j]^{ed}");

  auto* matrix = app.add_subcommand("matrix", "cut-and-join matrix elements, formula vs direct");
  matrix->add_option("--n", n, "weight of the partitions")->required();

  auto* selfcheck = app.add_subcommand("selfcheck", "run the built-in golden checks");
  selfcheck->add_option("--level", level, "quick|full")->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(hurwitz)) return run_hurwitz(m, lambda_text, method, max_work, threads);
    if (app.got_subcommand(table)) return run_table(n_max, m_max, format);
    if (app.got_subcommand(jack)) return run_jack(lambda_text, alpha_text);
    if (app.got_subcommand(zonal_cmd)) return run_zonal(lambda_text);
    if (app.got_subcommand(surface)) return run_surface(n, word);
    if (app.got_subcommand(matrix)) return run_matrix(n);
    if (app.got_subcommand(selfcheck)) return run_selfcheck(level);
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const DegeneracyError& e) {
    std::cerr << "degenerate eigensystem: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
