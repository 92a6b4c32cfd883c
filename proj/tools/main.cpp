// Command-line front end for the efountain shared library. Talks to the
// library exclusively through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "efountain.h"

namespace {

int report_failure(const char* what, ef_status status) {
  std::cerr << what << ": " << ef_status_name(status) << " (" << ef_last_error() << ")\n";
  return 2;
}

std::string render_report(const ef_report* report) {
  std::ostringstream os;
  os << "structure: " << ef_report_structure(report) << '\n';
  for (int i = 0; i < ef_report_line_count(report); ++i)
    os << ef_report_line(report, i) << '\n';
  return os.str();
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << '\n';
    return false;
  }
  out << text;
  return true;
}

// Prints the report, optionally mirrors it to a file, frees it, and turns
// the fail count into the exit code.
int finish_report(ef_report* report, const std::string& report_path) {
  const std::string text = render_report(report);
  std::cout << text;
  const int fails = ef_report_fail_count(report);
  ef_report_free(report);
  if (!report_path.empty() && !write_file(report_path, text)) return 2;
  return fails > 0 ? 1 : 0;
}

std::vector<int> parse_e_set_file(const std::string& path, bool& ok) {
  std::vector<int> out;
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open E-set file " << path << '\n';
    ok = false;
    return out;
  }
  int value = 0;
  while (in >> value) out.push_back(value);
  ok = true;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced E-Fountain semigroup analyzer"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Analyze a semigroup from a file");
  std::string input, format = "table", e_set_arg = "all-idempotents", ring = "int";
  std::string report_path, dump_category_path, dump_tri_left_path;
  analyze->add_option("input", input, "input file")->required();
  analyze->add_option("--format", format, "input format: table or transformations")
      ->check(CLI::IsMember({"table", "transformations"}));
  analyze->add_option("--e-set", e_set_arg, "E-set file, or 'all-idempotents'");
  analyze->add_option("--ring", ring, "coefficient ring: int, rational or modN");
  analyze->add_option("--report", report_path, "also write the report to this file");
  analyze->add_option("--dump-category", dump_category_path, "write the category dump here");
  analyze->add_option("--dump-tri-left", dump_tri_left_path, "write the tri_l dump here");

  // catalan
  auto* catalan = app.add_subcommand("catalan", "Verify the Catalan monoid theorems");
  int degree = 3;
  std::string catalan_ring = "int", catalan_report_path;
  catalan->add_option("--degree", degree, "degree of the Catalan monoid")->required();
  catalan->add_option("--ring", catalan_ring, "coefficient ring");
  catalan->add_option("--report", catalan_report_path, "also write the report to this file");

  // search
  auto* search = app.add_subcommand("search", "Sweep all small reduced E-Fountain structures");
  int max_order = 3;
  std::string search_report_path;
  search->add_option("--max-order", max_order, "largest semigroup order to enumerate")
      ->required();
  search->add_option("--report", search_report_path, "also write the report to this file");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    ef_semigroup* s = nullptr;
    ef_status status = format == "table" ? ef_semigroup_from_table_file(input.c_str(), &s)
                                         : ef_semigroup_from_generators_file(input.c_str(), &s);
    if (status != EF_OK) return report_failure("load", status);

    std::vector<int> e_set;
    const int* e_ptr = nullptr;
    int e_len = -1;
    if (e_set_arg != "all-idempotents") {
      bool ok = false;
      e_set = parse_e_set_file(e_set_arg, ok);
      if (!ok) {
        ef_semigroup_free(s);
        return 2;
      }
      e_ptr = e_set.data();
      e_len = static_cast<int>(e_set.size());
    }

    if (!dump_category_path.empty()) {
      char* dump = nullptr;
      status = ef_dump_category(s, e_ptr, e_len, &dump);
      if (status != EF_OK || !write_file(dump_category_path, dump ? dump : "")) {
        ef_string_free(dump);
        ef_semigroup_free(s);
        return status != EF_OK ? report_failure("dump-category", status) : 2;
      }
      ef_string_free(dump);
    }
    if (!dump_tri_left_path.empty()) {
      char* dump = nullptr;
      status = ef_dump_tri_left(s, e_ptr, e_len, &dump);
      if (status != EF_OK || !write_file(dump_tri_left_path, dump ? dump : "")) {
        ef_string_free(dump);
        ef_semigroup_free(s);
        return status != EF_OK ? report_failure("dump-tri-left", status) : 2;
      }
      ef_string_free(dump);
    }

    ef_report* report = nullptr;
    status = ef_analyze(s, e_ptr, e_len, ring.c_str(), input.c_str(), &report);
    ef_semigroup_free(s);
    if (status != EF_OK) return report_failure("analyze", status);
    return finish_report(report, report_path);
  }

  if (catalan->parsed()) {
    ef_report* report = nullptr;
    const ef_status status = ef_catalan_report(degree, catalan_ring.c_str(), &report);
    if (status != EF_OK) return report_failure("catalan", status);
    return finish_report(report, catalan_report_path);
  }

  if (search->parsed()) {
    // Stream entries as they are found; the mirror file gets the same text.
    std::ostringstream mirror;
    mirror << "structure: search_max_order_" << max_order << '\n';
    std::cout << "structure: search_max_order_" << max_order << '\n';
    struct Sink {
      std::ostringstream* mirror;
      int fails = 0;
    } sink{&mirror, 0};
    const ef_status status = ef_search_stream(
        max_order,
        [](const char* line, void* user) {
          auto* s = static_cast<Sink*>(user);
          std::cout << line << '\n';
          *s->mirror << line << '\n';
          if (std::string(line).find(": FAIL") != std::string::npos) ++s->fails;
        },
        &sink);
    if (status != EF_OK) return report_failure("search", status);
    if (!search_report_path.empty() && !write_file(search_report_path, mirror.str())) return 2;
    return sink.fails > 0 ? 1 : 0;
  }

  return 2;
}
