#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "liftings/cli/run.hpp"

using namespace liftings;

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Argument, "cannot write " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liftings: schemes of liftings and radical liftings of homogeneous ideals"};
  std::string input, command, order, t_values, json_path, text_path;
  unsigned seed = 0;
  std::size_t threads = 0;
  app.add_option("--input", input, "job file")->required();
  app.add_option("--command", command, "overrides the job's command");
  app.add_option("--order", order, "term order(s), comma separated; overrides the job");
  app.add_option("--t-values", t_values, "values of t for acm_lift, comma separated");
  app.add_option("--seed", seed, "seed for coordinate changes");
  app.add_option("--threads", threads, "worker threads for S-pair reductions");
  app.add_option("--json", json_path, "write the JSON report here (default: stdout)");
  app.add_option("--text", text_path, "write the text report here");
  CLI11_PARSE(app, argc, argv);

  cli::Json report;
  int code = 0;
  try {
    auto job = cli::parse_job_file(input);
    if (!command.empty()) {
      auto names = cli::command_names();
      if (std::find(names.begin(), names.end(), command) == names.end())
        fail(ErrorKind::Parse, "unknown command '" + command + "'");
      job.command = command;
    }
    if (!order.empty()) {
      job.orders.clear();
      for (const auto& o : cli::detail::split_list({order, 1, 1}, 0)) {
        order_from_name(o.text);
        job.orders.push_back(o.text);
      }
    }
    if (!t_values.empty()) job.t_values = cli::parse_integer_list(t_values);
    if (app.count("--seed")) job.seed = seed;
    if (threads) job.threads = threads;
    report = cli::run(job);
  } catch (const Error& e) {
    report = cli::error_report(e);
    code = cli::exit_code(e.kind());
    std::cerr << "liftings: " << to_string(e.kind()) << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    report = cli::error_report(Error(ErrorKind::InternalConsistency, e.what()));
    code = 4;
    std::cerr << "liftings: " << e.what() << "\n";
  }

  try {
    std::string json = report.dump(2) + "\n";
    if (json_path.empty()) std::cout << json;
    else write_file(json_path, json);
    if (!text_path.empty()) write_file(text_path, cli::text_report(report));
    else if (!json_path.empty()) std::cout << cli::text_report(report);
  } catch (const Error& e) {
    std::cerr << "liftings: " << e.what() << "\n";
    return 3;
  }
  return code;
}
