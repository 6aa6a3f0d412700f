#include <algorithm>
#include <filesystem>
#include <future>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "relcalc/cli.hpp"

namespace fs = std::filesystem;
using relcalc::cli::Report;

namespace {

int batch(const std::string& command, const fs::path& dir, const relcalc::cli::Options& opts,
          relcalc::cli::Format format) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<std::future<Report>> jobs;
  jobs.reserve(files.size());
  for (const auto& f : files) {
    jobs.push_back(std::async(std::launch::async, [&command, f, &opts] {
      return relcalc::cli::run_file(command, f, opts);
    }));
  }

  nlohmann::json out = nlohmann::json::array();
  bool any_error = false, any_none = false;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const Report r = jobs[i].get();
    any_error |= r.status == "error";
    any_none |= r.status == "no-solution";
    if (format == relcalc::cli::Format::text) {
      std::cout << "== " << files[i].filename().string() << "\n" << relcalc::cli::emit(r, format);
    } else {
      out.push_back({{"file", files[i].filename().string()}, {"report", r.to_json()}});
    }
  }
  if (format == relcalc::cli::Format::json) std::cout << nlohmann::json{{"batch", out}}.dump(2) << "\n";
  return any_error ? 1 : any_none ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relcalc: linear relations, multivalued projections and weighted least squares"};
  std::string command, file, batch_dir, format = "json";
  double tol = 0;
  relcalc::cli::Options opts;

  app.add_option("command", command, "command to run")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(relcalc::cli::kCommands),
                                                     std::end(relcalc::cli::kCommands))));
  app.add_option("file", file, "problem file")->check(CLI::ExistingFile);
  auto* tol_opt = app.add_option("--tol", tol, "absolute tolerance")->check(CLI::NonNegativeNumber);
  app.add_flag("--verify", opts.verify, "cross-check against an independent computation");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  auto* batch_opt =
      app.add_option("--batch", batch_dir, "run every *.json file in a directory")->check(CLI::ExistingDirectory);

  try {
    app.parse(argc, argv);
    if (file.empty() == batch_opt->empty()) {
      throw CLI::ValidationError("exactly one of <file> or --batch is required");
    }
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  if (!tol_opt->empty()) opts.tol = tol;
  const auto fmt = format == "text" ? relcalc::cli::Format::text : relcalc::cli::Format::json;

  if (!batch_opt->empty()) return batch(command, batch_dir, opts, fmt);
  const Report r = relcalc::cli::run_file(command, file, opts);
  std::cout << relcalc::cli::emit(r, fmt);
  return relcalc::cli::exit_code(r);
}
