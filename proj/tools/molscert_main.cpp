#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "molscert/datasets.hpp"
#include "molscert/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
  std::string format = "text";
  std::string out_path;
  bool fail_fast = false;
  int threads = 0;  // 0 = auto
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", flags.out_path, "Write the report to a file instead of stdout");
  cmd->add_flag("--fail-fast", flags.fail_fast, "Stop at the first violation");
  cmd->add_option("--threads", flags.threads, "Worker threads (0 = all cores)");
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << content;
}

template <typename Report>
int finish(const Report& report, const CommonFlags& flags) {
  if (flags.format == "json")
    emit(to_json(report).dump(1) + "\n", flags.out_path);
  else
    emit(to_text(report), flags.out_path);
  return report.pass ? kExitPass : kExitVerificationFailed;
}

int run_build_mols(const std::string& dataset, const std::string& out_path,
                   const std::string& format, int threads) {
  molscert::RunOptions opt{true, false, threads};
  std::optional<molscert::MOLSSet> mols;
  bool pass = false;
  std::string kind = molscert::dataset_kind(dataset);
  if (kind == "pa") {
    molscert::PAReport report = run_verify_pa(molscert::load_pa(dataset), opt);
    pass = report.pass;
    mols = std::move(report.mols);
    if (!pass) std::cerr << to_text(report);
  } else {
    molscert::DMReport report = run_verify_dm(molscert::load_dm(dataset), opt);
    pass = report.pass;
    mols = std::move(report.mols);
    if (!pass) std::cerr << to_text(report);
  }
  if (!pass || !mols) {
    std::cerr << "refusing to write unverified MOLS for " << dataset << "\n";
    return kExitVerificationFailed;
  }
  if (format == "json")
    emit(mols_to_json(*mols).dump() + "\n", out_path);
  else
    emit(write_mols_text(*mols), out_path);
  if (!out_path.empty())
    std::cout << "wrote " << mols->squares.size() << " MOLS(" << mols->order << ") to "
              << out_path << "\n";
  return kExitPass;
}

int run_datasets(const std::string& name, bool json) {
  std::vector<molscert::DatasetSummary> all = molscert::list_embedded();
  if (!name.empty()) {
    bool found = false;
    for (const auto& d : all) found = found || d.name == name;
    if (!found) {
      std::cerr << "unknown dataset: " << name << "\n";
      return kExitUsage;
    }
  }
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& d : all) {
    if (!name.empty() && d.name != name) continue;
    if (json) {
      j.push_back({{"name", d.name}, {"kind", d.kind}, {"summary", d.summary}});
    } else {
      std::cout << d.name << "  [" << d.kind << "]  " << d.summary << "\n";
    }
  }
  if (json) std::cout << j.dump(1) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Builds and certifies MOLS constructions from permutation codes "
               "and difference matrices"};
  app.require_subcommand(1);

  // verify-pa
  CommonFlags pa_flags;
  std::string pa_dataset;
  bool pa_build = false;
  CLI::App* verify_pa = app.add_subcommand(
      "verify-pa", "Verify a permutation-array dataset (orbits, distance, separability)");
  verify_pa->add_option("dataset", pa_dataset, "Embedded name or file path")->required();
  verify_pa->add_flag("--build", pa_build, "Also build the MOLS and verify them");
  add_common(verify_pa, pa_flags);

  // verify-dm
  CommonFlags dm_flags;
  std::string dm_dataset;
  bool dm_build = false;
  CLI::App* verify_dm = app.add_subcommand(
      "verify-dm", "Verify a difference-matrix dataset (expansion, row-pair differences)");
  verify_dm->add_option("dataset", dm_dataset, "Embedded name or file path")->required();
  verify_dm->add_flag("--build", dm_build, "Also build the MOLS and verify them");
  add_common(verify_dm, dm_flags);

  // build-mols
  std::string build_dataset, build_out, build_format = "mols";
  int build_threads = 0;
  CLI::App* build_cmd =
      app.add_subcommand("build-mols", "Verify a dataset and write its MOLS to a file");
  build_cmd->add_option("dataset", build_dataset, "Embedded name or file path")->required();
  build_cmd->add_option("--out", build_out, "Output path (stdout when omitted)");
  build_cmd->add_option("--format", build_format, "Output format")
      ->check(CLI::IsMember({"mols", "json"}));
  build_cmd->add_option("--threads", build_threads, "Worker threads (0 = all cores)");

  // verify-mols
  CommonFlags mols_flags;
  std::vector<std::string> mols_files;
  CLI::App* verify_mols_cmd =
      app.add_subcommand("verify-mols", "Verify MOLS files (Latin + pairwise orthogonality)");
  verify_mols_cmd->add_option("files", mols_files, "MOLS files")->required();
  add_common(verify_mols_cmd, mols_flags);

  // datasets
  std::string datasets_name;
  bool datasets_json = false;
  CLI::App* datasets_cmd = app.add_subcommand("datasets", "List the embedded datasets");
  datasets_cmd->add_option("name", datasets_name, "Show a single dataset");
  datasets_cmd->add_flag("--json", datasets_json, "Machine-readable listing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify_pa->parsed()) {
      molscert::RunOptions opt{pa_build, pa_flags.fail_fast, pa_flags.threads};
      return finish(run_verify_pa(molscert::load_pa(pa_dataset), opt), pa_flags);
    }
    if (verify_dm->parsed()) {
      molscert::RunOptions opt{dm_build, dm_flags.fail_fast, dm_flags.threads};
      return finish(run_verify_dm(molscert::load_dm(dm_dataset), opt), dm_flags);
    }
    if (build_cmd->parsed())
      return run_build_mols(build_dataset, build_out, build_format, build_threads);
    if (verify_mols_cmd->parsed()) {
      bool all_pass = true;
      std::string text_out;
      nlohmann::ordered_json json_out = nlohmann::ordered_json::array();
      for (const std::string& file : mols_files) {
        std::ifstream in(file, std::ios::binary);
        if (!in) {
          std::cerr << "cannot read " << file << "\n";
          return kExitUsage;
        }
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        molscert::MOLSSet mols = molscert::parse_mols_text(text);
        molscert::RunOptions opt{false, mols_flags.fail_fast, mols_flags.threads};
        molscert::MOLSFileReport report = run_verify_mols(file, mols, opt);
        all_pass = all_pass && report.pass;
        if (mols_flags.format == "json")
          json_out.push_back(to_json(report));
        else
          text_out += to_text(report);
      }
      if (mols_flags.format == "json")
        emit(json_out.dump(1) + "\n", mols_flags.out_path);
      else
        emit(text_out, mols_flags.out_path);
      return all_pass ? kExitPass : kExitVerificationFailed;
    }
    if (datasets_cmd->parsed()) return run_datasets(datasets_name, datasets_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
