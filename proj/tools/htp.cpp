// Command-line front end. Talks to the library only through htp.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "htp/htp.h"

namespace {

enum Exit { kOk = 0, kInput = 1, kFailed = 2, kGuard = 3 };

struct Deleter {
  void operator()(htp_coloring* c) const { htp_coloring_free(c); }
  void operator()(htp_partition* p) const { htp_partition_free(p); }
  void operator()(htp_report* r) const { htp_report_free(r); }
  void operator()(char* s) const { htp_string_free(s); }
};
using Coloring = std::unique_ptr<htp_coloring, Deleter>;
using Partition = std::unique_ptr<htp_partition, Deleter>;
using Report = std::unique_ptr<htp_report, Deleter>;
using String = std::unique_ptr<char, Deleter>;

struct Failure {
  htp_status status;
};

void check(htp_status s) {
  if (s != HTP_OK) throw Failure{s};
}

int exit_code(htp_status s) {
  switch (s) {
    case HTP_OK: return kOk;
    case HTP_GUARD_EXCEEDED: return kGuard;
    case HTP_DEFECT:
    case HTP_INTERNAL: return kFailed;
    default: return kInput;
  }
}

Coloring load(const std::string& path) {
  htp_coloring* c = nullptr;
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    check(htp_coloring_parse(text.c_str(), &c));
  } else {
    check(htp_coloring_load(path.c_str(), &c));
  }
  return Coloring(c);
}

std::string take(char* s) { return String(s).get(); }

std::string coloring_text(const htp_coloring* c) {
  char* s = nullptr;
  check(htp_coloring_to_string(c, &s));
  return take(s);
}

std::string partition_text(const htp_partition* p) {
  char* s = nullptr;
  check(htp_partition_to_string(p, &s));
  return take(s);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!(out << text)) {
    std::cerr << "htp: cannot write " << path << "\n";
    throw Failure{HTP_IO_ERROR};
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path == "-")
    std::cout << text;
  else
    write_file(path, text);
}

// Coloring goes to -o if given, else stdout.
void emit_coloring(const htp_coloring* c, const std::string& output) {
  if (output.empty())
    std::cout << coloring_text(c);
  else
    check(htp_coloring_save(c, output.c_str()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heterochromatic tree partitions of edge-colored complete graphs"};
  app.set_version_flag("--version", htp_version());
  app.require_subcommand(1);

  std::int64_t fn = 0, fr = 0;
  auto* formula = app.add_subcommand("formula", "closed-form partition number for K_n with r colors");
  formula->add_option("n", fn)->required();
  formula->add_option("r", fr)->required();

  int cn = 0, cr = 0, fill = 0;
  std::string output, partition_path;
  auto* canonical = app.add_subcommand("canonical", "extremal coloring attaining the closed form");
  canonical->add_option("n", cn)->required();
  canonical->add_option("r", cr)->required();
  canonical->add_option("-o,--output", output, "write the coloring here instead of stdout");
  canonical->add_option("--fill", fill, "fill color when no color is left over (default 1)");
  canonical->add_option("--partition", partition_path, "write the extremal partition here (- for stdout)");

  std::string file;
  int max_vertices = 0;
  auto* solve = app.add_subcommand("solve", "exact partition number of a coloring (- for stdin)");
  solve->add_option("file", file)->required();
  solve->add_option("--max-vertices", max_vertices, "raise the size guard");
  solve->add_option("--partition", partition_path, "write an optimal partition here (- for stdout)");

  auto* construct = app.add_subcommand("construct", "polynomial partition of a complete coloring");
  construct->add_option("file", file)->required();
  construct->add_option("--partition", partition_path, "write the partition here (- for stdout)");

  int from = 0, to = 0;
  auto* merge = app.add_subcommand("merge", "recolor color FROM as TO and renumber");
  merge->add_option("file", file)->required();
  merge->add_option("from", from)->required();
  merge->add_option("to", to)->required();
  merge->add_option("-o,--output", output);

  std::string campaign, report_path, format = "text";
  htp_verify_params params = htp_verify_defaults();
  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->add_option("campaign", campaign)
      ->required()
      ->check(CLI::IsMember({"theorem1", "monotonicity", "cutedge", "constructive"}));
  verify->add_option("--max-n", params.max_n)->capture_default_str();
  verify->add_option("--samples", params.samples)->capture_default_str();
  verify->add_option("--seed", params.seed)->capture_default_str();
  verify->add_option("--threads", params.threads, "0 = all cores")->capture_default_str();
  verify->add_option("--report", report_path, "also write the report here; failing colorings go next to it");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json", "summary"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInput;
  }

  // Effective configuration, one comment line on stderr.
  {
    const auto* sub = app.get_subcommands().front();
    std::cerr << "# " << sub->get_name();
    for (const auto* opt : sub->get_options()) {
      if (opt->get_name() == "--help" || (opt->count() == 0 && opt->get_default_str().empty())) continue;
      const auto values = opt->count() > 0 ? opt->results() : std::vector<std::string>{opt->get_default_str()};
      std::cerr << " " << (opt->get_lnames().empty() ? opt->get_name() : opt->get_lnames().front()) << "=" << values.front();
    }
    std::cerr << "\n";
  }

  try {
    if (*formula) {
      htp_formula_result f{};
      check(htp_formula(fn, fr, &f));
      std::cout << "t=" << (f.t < 0 ? std::string("none") : std::to_string(f.t)) << " value=" << f.value << "\n";
    } else if (*canonical) {
      htp_coloring* c = nullptr;
      htp_partition* p = nullptr;
      check(htp_canonical(cn, cr, fill, &c, partition_path.empty() ? nullptr : &p));
      Coloring coloring(c);
      Partition partition(p);
      emit_coloring(coloring.get(), output);
      if (!partition_path.empty()) emit(partition_path, partition_text(partition.get()));
    } else if (*solve) {
      auto c = load(file);
      int count = 0;
      htp_partition* p = nullptr;
      check(htp_solve(c.get(), max_vertices, &count, partition_path.empty() ? nullptr : &p));
      Partition partition(p);
      std::cout << "count=" << count << "\n";
      if (!partition_path.empty()) emit(partition_path, partition_text(partition.get()));
    } else if (*construct) {
      auto c = load(file);
      int count = 0, bound = 0;
      htp_partition* p = nullptr;
      check(htp_construct(c.get(), &count, &bound, partition_path.empty() ? nullptr : &p));
      Partition partition(p);
      std::cout << "count=" << count << " bound=" << bound << "\n";
      if (!partition_path.empty()) emit(partition_path, partition_text(partition.get()));
    } else if (*merge) {
      auto c = load(file);
      htp_coloring* m = nullptr;
      check(htp_coloring_merge(c.get(), from, to, &m));
      emit_coloring(Coloring(m).get(), output);
    } else if (*verify) {
      htp_report* r = nullptr;
      check(htp_verify(campaign.c_str(), &params, &r));
      Report report(r);
      char* s = nullptr;
      if (format == "json")
        check(htp_report_json(report.get(), &s));
      else if (format == "summary")
        check(htp_report_summary(report.get(), &s));
      else
        check(htp_report_text(report.get(), &s));
      const std::string body = take(s);
      std::cout << body;
      if (!report_path.empty()) {
        write_file(report_path, body);
        for (int i = 0; i < htp_report_failure_count(report.get()); ++i) {
          char* text = nullptr;
          check(htp_report_failure_coloring(report.get(), i, &text));
          const std::string coloring = take(text);
          if (!coloring.empty()) write_file(report_path + ".failure-" + std::to_string(i) + ".txt", coloring);
        }
      }
      return htp_report_passed(report.get()) ? kOk : kFailed;
    }
  } catch (const Failure& f) {
    if (f.status != HTP_IO_ERROR || *htp_last_error() != '\0')
      std::cerr << "htp: " << htp_status_name(f.status) << ": " << htp_last_error() << "\n";
    return exit_code(f.status);
  }
  return kOk;
}
