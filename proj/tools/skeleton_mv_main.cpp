// Command-line front end: thin parsing/dispatch/serialization over the
// library.  Exit codes: 0 success (JSON document on standard output), 2 usage
// or syntax errors (message on standard error), 3 domain errors (JSON error
// object on standard output).

#include <cctype>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skmv/errors.hpp"
#include "skmv/json_io.hpp"

namespace {

/// SKELETON_MV_THREADS, when set, must be a positive integer (it caps
/// internal parallelism; the present implementation is sequential, so any
/// positive value is honored trivially).
bool threads_env_valid() {
  const char* raw = std::getenv("SKELETON_MV_THREADS");
  if (raw == nullptr) return true;
  const std::string text(raw);
  if (text.empty() || text.size() > 9) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return std::stoi(text) >= 1;
}

int emit(const skmv::json& payload) {
  std::cout << payload.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (!threads_env_valid()) {
    std::cerr << "error: SKELETON_MV_THREADS must be a positive integer\n";
    return 2;
  }

  CLI::App app{"one-skeleton path model toolkit"};
  app.require_subcommand(1);

  int rank = 1;
  std::string path_text;
  std::string path_text_b;
  std::string monomial_text;
  std::string hall_action;
  std::string hall_arg1;
  std::string hall_arg2;
  std::vector<int> project_positions;
  std::string out_dir = "./fixtures";

  CLI::App* chains = app.add_subcommand("chains", "all fundamental chains");
  chains->add_option("rank", rank, "rank, 1..8")->required()->check(CLI::Range(1, 8));

  CLI::App* pol_cmd = app.add_subcommand("pol", "path polytope of a path literal");
  pol_cmd->add_option("rank", rank, "rank, 1..8")->required()->check(CLI::Range(1, 8));
  pol_cmd->add_option("path", path_text, "comma-separated factors, e.g. \"w1, w1-w2\"")
      ->required();

  CLI::App* mink = app.add_subcommand("minkowski", "Minkowski sum of two path polytopes");
  mink->add_option("rank", rank, "rank, 1..8")->required()->check(CLI::Range(1, 8));
  mink->add_option("path1", path_text, "first path literal")->required();
  mink->add_option("path2", path_text_b, "second path literal")->required();

  CLI::App* comult = app.add_subcommand("comult", "comultiplication of a monomial");
  comult->add_option("rank", rank, "rank, 1..8")->required()->check(CLI::Range(1, 8));
  comult->add_option("monomial", monomial_text, "\"1\" or x[i,j] tokens joined by '*'")
      ->required();

  CLI::App* hall = app.add_subcommand("hall", "Hall algebra operations");
  hall->add_option("rank", rank, "rank, 1..8")->required()->check(CLI::Range(1, 8));
  hall->add_option("action", hall_action, "product | serre | delta")
      ->required()
      ->check(CLI::IsMember({"product", "serre", "delta"}));
  CLI::Option* hall_opt1 =
      hall->add_option("arg1", hall_arg1, "object literal for product, interval for delta");
  CLI::Option* hall_opt2 = hall->add_option("arg2", hall_arg2, "second object literal");

  CLI::App* gallery = app.add_subcommand("gallery", "standard-quadruple gallery");
  gallery->add_option("rank", rank, "rank, 1..8")->required()->check(CLI::Range(1, 8));
  gallery
      ->add_option("--project", project_positions,
                   "positions whose span-closure flat the gallery is projected to")
      ->delimiter(',')
      ->expected(1, -1);

  CLI::App* cluster = app.add_subcommand("cluster", "seed edges, polytopes, exchange matrix");
  cluster->add_option("rank", rank, "rank, 1..8")->required()->check(CLI::Range(1, 8));

  CLI::App* fixtures = app.add_subcommand("fixtures", "write the golden dataset");
  fixtures->add_option("rank", rank, "rank, 1..4")->required()->check(CLI::Range(1, 4));
  fixtures->add_option("--out", out_dir, "output directory (default ./fixtures)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (chains->parsed()) return emit(skmv::chains_payload(rank));
    if (pol_cmd->parsed()) return emit(skmv::pol_payload(rank, path_text));
    if (mink->parsed()) return emit(skmv::minkowski_payload(rank, path_text, path_text_b));
    if (comult->parsed()) return emit(skmv::comult_payload(rank, monomial_text));
    if (hall->parsed()) {
      const int given = (hall_opt1->count() > 0 ? 1 : 0) + (hall_opt2->count() > 0 ? 1 : 0);
      if (hall_action == "product") {
        if (given != 2) {
          std::cerr << "error: hall product takes exactly two object literals\n";
          return 2;
        }
        return emit(skmv::hall_product_payload(rank, hall_arg1, hall_arg2));
      }
      if (hall_action == "serre") {
        if (given != 0) {
          std::cerr << "error: hall serre takes no further arguments\n";
          return 2;
        }
        return emit(skmv::hall_serre_payload(rank));
      }
      if (given != 1) {
        std::cerr << "error: hall delta takes exactly one interval literal\n";
        return 2;
      }
      return emit(skmv::hall_delta_payload(rank, hall_arg1));
    }
    if (gallery->parsed()) {
      std::optional<std::vector<int>> positions;
      if (!project_positions.empty()) positions = project_positions;
      return emit(skmv::gallery_payload(rank, positions));
    }
    if (cluster->parsed()) return emit(skmv::cluster_payload(rank));
    if (fixtures->parsed()) {
      const std::vector<std::string> files = skmv::write_fixtures(rank, out_dir);
      return emit(skmv::json{{"directory", out_dir}, {"files", files}});
    }
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const skmv::DomainError& e) {
    std::cout << skmv::json{{"detail", e.what()}, {"error", e.code()}}.dump(2) << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
