#include "obp/cli.hpp"

#include <cmath>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "obp/construct.hpp"
#include "obp/io.hpp"
#include "obp/matrix.hpp"
#include "obp/search.hpp"
#include "obp/verify.hpp"

namespace obp::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CoverMode parse_mode(const std::string& name) {
  if (name == "bp") return CoverMode::partition;
  if (name == "bp2") return CoverMode::two_cover;
  return CoverMode::ordered;
}

OrderedPartition load_partition(const std::string& path) {
  try {
    return parse_partition(read_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

BooleanMatrix load_matrix(const std::string& path) {
  try {
    return parse_matrix(read_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void print_report(std::ostream& out, const OrderedPartition& p, const VerifyResult& result) {
  const auto& r = result.report;
  out << "N=" << p.universe_size() << " m=" << p.size() << "\n";
  out << r.once_count << " once, " << r.twice_count << " twice\n";
  if (!r.doubly_covered.empty()) {
    out << "covered twice:";
    for (const auto& [u, v] : r.doubly_covered) out << " {" << u << "," << v << "}";
    out << "\n";
  }
  out << "violations: " << r.violations.size() << "\n";
  for (const auto& v : r.violations) out << "  {" << v.u << "," << v.v << "} " << to_string(v.reason) << "\n";
  out << (result.pass ? "PASS" : "FAIL") << "\n";
}

json gap_json(int n, int k, const OrderedPartition& p, const VerifyResult& check, const BooleanMatrix& m,
              bool fooling_ok, const GapReport& gap) {
  json record;
  record["n"] = n;
  record["k"] = k;
  record["N"] = p.universe_size();
  record["m"] = p.size();
  record["predicted_size"] = predicted_size(n, k);
  record["verified"] = check.pass;
  record["once"] = check.report.once_count;
  record["twice"] = check.report.twice_count;
  record["matrix_order"] = m.rows();
  record["rank_q"] = gap.rank_q;
  record["rank_gf2"] = gap.rank_gf2;
  record["diagonal_fooling_set"] = fooling_ok;
  record["fool_lower_bound"] = gap.fool_lower_bound;
  record["dhs_holds"] = gap.fool_lower_bound <= (gap.rank_q + 1) * (gap.rank_q + 1);
  record["exponent"] = gap.exponent ? json(*gap.exponent) : json(nullptr);
  record["size_exponent"] = std::log(static_cast<double>(p.size())) / std::log(static_cast<double>(p.universe_size()));
  return record;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordered biclique partitions of complete graphs: construction, verification, matrices, search"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::uint64_t max_vertices = ConstructOptions{}.max_vertices;

  int n = 0;
  int k = 0;
  std::string out_path;
  auto* construct = app.add_subcommand("construct", "Build the partition of K_{n^(2k-1)} and write it as JSON");
  construct->add_option("--n", n, "base n >= 2")->required()->check(CLI::Range(2, 1 << 20));
  construct->add_option("--k", k, "arity k >= 1")->required()->check(CLI::Range(1, 1 << 20));
  construct->add_option("--out", out_path, "partition JSON output path");
  construct->add_option("--max-vertices", max_vertices, "vertex budget");
  construct->callback([&] {
    action = [&] {
      ConstructOptions options;
      options.max_vertices = max_vertices;
      const OrderedPartition p = build_partition(n, k, options);
      if (!out_path.empty()) write_file_atomic(out_path, format_partition(p));
      out << "N=" << p.universe_size() << " m=" << p.size() << " predicted_size=" << predicted_size(n, k) << "\n";
      return ExitCode::ok;
    };
  });

  std::string partition_path;
  auto* verify = app.add_subcommand("verify", "Check a partition JSON file for the ordered condition");
  verify->add_option("--partition", partition_path, "partition JSON")->required();
  verify->callback([&] {
    action = [&] {
      const OrderedPartition p = load_partition(partition_path);
      const VerifyResult result = verify_ordered(p);
      print_report(out, p, result);
      return result.pass ? ExitCode::ok : ExitCode::verification_failed;
    };
  });

  std::uint64_t law_budget = LawOptions{}.max_vertices;
  auto* laws = app.add_subcommand("laws", "Brute-force the edge-family laws for (n, k)");
  laws->add_option("--n", n, "base n >= 2")->required()->check(CLI::Range(2, 1 << 20));
  laws->add_option("--k", k, "arity k >= 1")->required()->check(CLI::Range(1, 1 << 20));
  laws->add_option("--max-vertices", law_budget, "vertex budget");
  laws->callback([&] {
    action = [&] {
      LawOptions options;
      options.max_vertices = law_budget;
      const FamilyLawsResult result = verify_family_laws(n, k, in_family, options);
      out << "pairs checked: " << result.pairs_checked << "\n";
      for (const auto& c : result.counterexamples) out << "  {" << c.u << "," << c.v << "} " << c.law << "\n";
      out << (result.pass ? "PASS" : "FAIL") << "\n";
      return result.pass ? ExitCode::ok : ExitCode::verification_failed;
    };
  });

  auto* matrix = app.add_subcommand("matrix", "Write the 0/1 matrix of an ordered partition");
  matrix->add_option("--partition", partition_path, "partition JSON")->required();
  matrix->add_option("--out", out_path, "matrix output path (stdout if omitted)");
  matrix->callback([&] {
    action = [&] {
      const OrderedPartition p = load_partition(partition_path);
      if (const auto check = verify_ordered(p); !check.pass) {
        print_report(err, p, check);
        return ExitCode::verification_failed;
      }
      const std::string text = format_matrix(partition_to_matrix(p));
      if (out_path.empty())
        out << text;
      else
        write_file_atomic(out_path, text);
      return ExitCode::ok;
    };
  });

  std::string matrix_path;
  std::string field = "q";
  auto* rank = app.add_subcommand("rank", "Exact rank of a matrix file");
  rank->add_option("--matrix", matrix_path, "matrix text file")->required();
  rank->add_option("--field", field, "q or gf2")->check(CLI::IsMember({"q", "gf2"}));
  rank->callback([&] {
    action = [&] {
      const BooleanMatrix m = load_matrix(matrix_path);
      out << rank_exact(m, field == "gf2" ? Field::gf2 : Field::rationals) << "\n";
      return ExitCode::ok;
    };
  });

  std::string cells_path;
  int z = 0;
  auto* fool = app.add_subcommand("fool", "Verify a fooling-set claim (default: full diagonal, z = 0)");
  fool->add_option("--matrix", matrix_path, "matrix text file")->required();
  fool->add_option("--cells", cells_path, "JSON array of 1-based [row, column] pairs");
  fool->add_option("--z", z, "0 or 1")->check(CLI::Range(0, 1));
  fool->callback([&] {
    action = [&] {
      const BooleanMatrix m = load_matrix(matrix_path);
      FoolingSetClaim claim;
      if (cells_path.empty()) {
        claim = FoolingSetClaim::diagonal(m.rows(), z);
      } else {
        try {
          claim = parse_cells(read_file(cells_path), z);
        } catch (const FormatError& e) {
          throw FormatError(cells_path + ": " + e.what());
        }
        for (const auto& [r, c] : claim.cells)
          if (r < 1 || r > m.rows() || c < 1 || c > m.cols())
            throw FormatError(cells_path + ": cell (" + std::to_string(r) + "," + std::to_string(c) +
                              ") outside the matrix");
      }
      const bool okay = verify_fooling_set(m, claim);
      out << (okay ? "verified" : "rejected") << " fooling set of size " << claim.cells.size() << " (z=" << claim.z
          << ")\n";
      return okay ? ExitCode::ok : ExitCode::verification_failed;
    };
  });

  std::string mode = "obp";
  std::uint64_t budget = SearchOptions{}.node_budget;
  std::string witness_path = "witness.json";
  auto* search = app.add_subcommand("search", "Exact minimum cover size of K_n");
  search->add_option("--n", n, "number of vertices >= 2")->required()->check(CLI::Range(2, 64));
  search->add_option("--mode", mode, "bp, bp2 or obp")->required()->check(CLI::IsMember({"bp", "bp2", "obp"}));
  search->add_option("--budget", budget, "node budget");
  search->add_option("--out", witness_path, "witness JSON output path")->capture_default_str();
  search->callback([&] {
    action = [&] {
      SearchOptions options;
      options.node_budget = budget;
      const MinCoverResult result = min_cover_size(n, parse_mode(mode), options);
      if (!result.known) {
        out << "unknown [" << result.lower << ", " << result.upper << "]\n";
        return ExitCode::resource_limit;
      }
      write_file_atomic(witness_path, format_partition(*result.witness));
      out << result.value << "\n";
      return ExitCode::ok;
    };
  });

  auto* report = app.add_subcommand("report", "Construct, verify, build the matrix, rank it and check fooling sets");
  report->add_option("--n", n, "base n >= 2")->required()->check(CLI::Range(2, 1 << 20));
  report->add_option("--k", k, "arity k >= 1")->required()->check(CLI::Range(1, 1 << 20));
  report->add_option("--max-vertices", max_vertices, "vertex budget");
  report->callback([&] {
    action = [&] {
      ConstructOptions options;
      options.max_vertices = max_vertices;
      const OrderedPartition p = build_partition(n, k, options);
      const VerifyResult check = verify_ordered(p);
      if (!check.pass) {
        print_report(err, p, check);
        return ExitCode::verification_failed;
      }
      const BooleanMatrix m = partition_to_matrix(p);
      const bool fooling_ok = verify_fooling_set(m, FoolingSetClaim::diagonal(m.rows()));
      const GapReport gap = gap_report(p);
      out << gap_json(n, k, p, check, m, fooling_ok, gap).dump() << "\n";
      return fooling_ok ? ExitCode::ok : ExitCode::verification_failed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run with --help for usage\n";
    return ExitCode::usage_error;
  }

  try {
    return action();
  } catch (const BudgetExceeded& e) {
    err << "resource limit: " << e.what() << "\n";
    return ExitCode::resource_limit;
  } catch (const FormatError& e) {
    err << "malformed input: " << e.what() << "\n";
    return ExitCode::usage_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::usage_error;
  }
}

}  // namespace obp::cli
