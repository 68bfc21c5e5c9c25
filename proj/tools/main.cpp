#include <string>

#include <CLI11.hpp>

#include "simproj/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Euclidean projection onto the scaled simplex; row-wise "
      "regularization of quasi-stochastic matrices"};

  simproj::cli::CliConfig config;
  std::string mode = "vector";
  std::string delimiter = ",";

  app.add_option("--mode", mode, "vector | matrix")
      ->check(CLI::IsMember({"vector", "matrix"}))
      ->capture_default_str();
  app.add_option("--delimiter", delimiter, "field separator")
      ->check([](const std::string& s) {
        return s.size() == 1 ? std::string{}
                             : std::string{"delimiter must be a single "
                                           "character"};
      })
      ->capture_default_str();
  app.add_option("--target-sum", config.target_sum,
                 "row sum of the target simplex")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--verify", config.verify,
               "check every output row against the optimality conditions; "
               "any failure exits 3");
  app.add_flag("--report", config.report,
               "per-row summary (support size, shift, squared distance) on "
               "standard error");
  app.add_option("--precision", config.precision,
                 "digits after the decimal point; 17 = shortest exact")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
  app.add_option("--input", config.input, "input path, - for standard input")
      ->capture_default_str();
  app.add_option("--output", config.output,
                 "output path, - for standard output")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  config.mode = mode == "matrix" ? simproj::cli::Mode::Matrix
                                 : simproj::cli::Mode::Vector;
  config.delimiter = delimiter[0];

  return simproj::cli::run(config);
}
