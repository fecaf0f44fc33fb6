// Command-line surface for the generalized Narayana toolkit: table emission,
// multi-oracle cross-verification, OEIS b-file checking, figure rendering,
// and the involution itself.
//
// Exit codes: 0 success/match, 1 mismatch, 2 usage or parse error.

#include "CLI11.hpp"

#include "narayana/bfile.hpp"
#include "narayana/dyck.hpp"
#include "narayana/involution.hpp"
#include "narayana/svg.hpp"
#include "narayana/table.hpp"
#include "narayana/verify.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

int run_table(int i, int nmax, const std::string& format, const std::string& output) {
  const narayana::TableFormat fmt =
      format == "tsv" ? narayana::TableFormat::Tsv : narayana::TableFormat::Aligned;
  write_output(output, narayana::render_table(i, nmax, fmt));
  return 0;
}

int run_verify(const narayana::VerifyOptions& options, const std::string& output) {
  const narayana::OracleTables tables = narayana::compute_oracle_tables(options);
  const narayana::VerifyReport report = narayana::compare_oracle_tables(tables, options);
  write_output(output, narayana::render_verify_report(report, options));
  return report.mismatches == 0 ? 0 : 1;
}

int run_oeis_check(const std::string& bfile_path, const std::string& target_name,
                   std::optional<long long> offset, bool drop_trailing_zeros,
                   const std::string& output) {
  const auto target = narayana::oeis_target_from_name(target_name);
  if (!target) {
    std::cerr << "unknown target \"" << target_name << "\"; expected i1, i2 or i3r\n";
    return 2;
  }
  std::ifstream in(bfile_path);
  if (!in) {
    std::cerr << "cannot open b-file: " << bfile_path << '\n';
    return 2;
  }
  const auto entries = narayana::parse_bfile(in);
  const auto result = narayana::check_bfile(entries, *target, offset, drop_trailing_zeros);
  write_output(output, narayana::render_oeis_report(*target, result));
  return result.match ? 0 : 1;
}

int run_figure(const std::string& path_text, const std::string& output) {
  const narayana::DyckPath p = narayana::parse_path(path_text);
  const std::string svg = narayana::figure_svg(p);
  write_output(output, svg);
  return 0;
}

int run_phi(const std::string& path_text, const std::string& input_file,
            const std::string& output) {
  std::ostringstream out;
  if (!input_file.empty()) {
    std::ifstream in(input_file);
    if (!in) throw std::runtime_error("cannot open input file: " + input_file);
    std::string line;
    while (std::getline(in, line)) {
      out << narayana::render_path(narayana::phi(narayana::parse_path(line))) << '\n';
    }
  } else {
    out << narayana::render_path(narayana::phi(narayana::parse_path(path_text))) << '\n';
  }
  write_output(output, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Narayana numbers: Dyck-path census, closed form, "
               "nonintersecting-path determinant, generating function, bijections"};
  app.require_subcommand(1);

  // table
  auto* table = app.add_subcommand("table", "print the N_i(n,j) triangle for one i");
  int table_i = 1;
  int table_nmax = 5;
  std::string table_format = "aligned";
  std::string table_output;
  table->add_option("-i,--index", table_i, "return count i (row family)")->required();
  table->add_option("-n,--nmax", table_nmax, "largest semilength row")->required();
  table->add_option("--format", table_format, "aligned or tsv")
      ->check(CLI::IsMember({"aligned", "tsv"}));
  table->add_option("-o,--output", table_output, "write to file instead of stdout");

  // verify
  auto* verify = app.add_subcommand("verify", "cross-check the oracles cell by cell");
  narayana::VerifyOptions verify_options;
  std::vector<std::string> oracle_names;
  std::string verify_output;
  verify->add_option("-n,--nmax", verify_options.nmax, "check all cells with n <= nmax");
  verify->add_option("--oracles", oracle_names,
                     "subset of census,closed,lgv,gf (default all)")
      ->delimiter(',');
  verify->add_option("--census-bound", verify_options.census_bound,
                     "enumeration refusal bound for the census oracle");
  verify->add_option("--gf-bound", verify_options.gf_bound,
                     "expansion refusal bound for the gf oracle");
  verify->add_option("-o,--output", verify_output, "write to file instead of stdout");

  // oeis-check
  auto* oeis = app.add_subcommand("oeis-check", "compare a local OEIS b-file to a target");
  std::string oeis_bfile;
  std::string oeis_target = "i2";
  long long oeis_offset = 0;
  bool oeis_has_offset = false;
  bool oeis_drop_zeros = false;
  std::string oeis_output;
  oeis->add_option("bfile", oeis_bfile, "path to the local b-file")->required();
  oeis->add_option("--target", oeis_target, "i1 (A001263), i2 (A108838), i3r (A281293)");
  oeis->add_option("--offset", oeis_offset,
                   "b-file index aligned with the first generated term "
                   "(default: the file's first index)")
      ->each([&](const std::string&) { oeis_has_offset = true; });
  oeis->add_flag("--drop-trailing-zeros", oeis_drop_zeros,
                 "strip each row's trailing zeros before linearizing");
  oeis->add_option("-o,--output", oeis_output, "write to file instead of stdout");

  // figure
  auto* figure = app.add_subcommand("figure", "emit an SVG of a path, its involution "
                                              "image, and the image's polyomino");
  std::string figure_path;
  std::string figure_output;
  figure->add_option("path", figure_path, "Dyck path over {U,D}")->required();
  figure->add_option("-o,--output", figure_output, "write to file instead of stdout");

  // phi
  auto* phi_cmd = app.add_subcommand("phi", "apply the involution to a path");
  std::string phi_path;
  std::string phi_file;
  std::string phi_output;
  phi_cmd->add_option("path", phi_path, "Dyck path over {U,D}");
  phi_cmd->add_option("--file", phi_file, "newline-delimited paths, one result per line");
  phi_cmd->add_option("-o,--output", phi_output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(table)) {
      return run_table(table_i, table_nmax, table_format, table_output);
    }
    if (app.got_subcommand(verify)) {
      if (!oracle_names.empty()) {
        verify_options.use_census = verify_options.use_closed = false;
        verify_options.use_lgv = verify_options.use_gf = false;
        for (const std::string& name : oracle_names) {
          if (name == "census") {
            verify_options.use_census = true;
          } else if (name == "closed") {
            verify_options.use_closed = true;
          } else if (name == "lgv") {
            verify_options.use_lgv = true;
          } else if (name == "gf") {
            verify_options.use_gf = true;
          } else {
            std::cerr << "unknown oracle \"" << name << "\"\n";
            return 2;
          }
        }
      }
      return run_verify(verify_options, verify_output);
    }
    if (app.got_subcommand(oeis)) {
      return run_oeis_check(oeis_bfile, oeis_target,
                            oeis_has_offset ? std::optional<long long>(oeis_offset)
                                            : std::nullopt,
                            oeis_drop_zeros, oeis_output);
    }
    if (app.got_subcommand(figure)) {
      return run_figure(figure_path, figure_output);
    }
    if (app.got_subcommand(phi_cmd)) {
      return run_phi(phi_path, phi_file, phi_output);
    }
  } catch (const narayana::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const narayana::bfile_error& e) {
    std::cerr << "b-file error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
