// cauchymds: split files into k+r shards, rebuild them from any k, verify the
// MDS property and emit the XOR-complexity study.
//
// Exit codes: 0 success, 1 usage / invalid parameters, 2 data or IO error,
// 3 verification failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "cauchymds/codec.hpp"
#include "cauchymds/metrics.hpp"
#include "cauchymds/shard.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kData = 2, kVerify = 3 };

int cmd_encode(int p, int k, int r, const std::string& out_dir, const std::string& input) {
  const auto params = cauchymds::CodeParams::make(p, k, r);
  for (const auto& path : cauchymds::shard::encode_file(input, params, out_dir)) {
    std::cout << path.string() << '\n';
  }
  return kOk;
}

int cmd_decode(const std::string& output, const std::vector<std::string>& shards) {
  std::vector<std::filesystem::path> paths(shards.begin(), shards.end());
  cauchymds::shard::decode_files(paths, output);
  return kOk;
}

int cmd_mds_check(int p, int k, int r) {
  const auto params = cauchymds::CodeParams::make(p, k, r);
  const bool ok = cauchymds::mds_check(params);
  std::cout << "C(" << k << "," << r << "," << p << "): "
            << (ok ? "MDS property holds" : "MDS property FAILS") << '\n';
  return ok ? kOk : kVerify;
}

int cmd_complexity(int r, int p_max, const std::string& csv) {
  const auto primes = cauchymds::primes_in_range(2 * r + 1, p_max);
  if (primes.empty()) {
    throw std::invalid_argument("no primes p with 2r < p <= p-max");
  }
  const auto rows = cauchymds::normalized_curves(r, primes);
  if (csv == "-") {
    cauchymds::write_csv(std::cout, rows);
  } else {
    std::ofstream out(csv, std::ios::binary | std::ios::trunc);
    if (!out) throw cauchymds::shard::DataError("cannot create " + csv);
    cauchymds::write_csv(out, rows);
    if (!out) throw cauchymds::shard::DataError("cannot write " + csv);
  }
  bool ok = true;
  for (const auto& row : rows) {
    if (!row.proposed_below_circulant() || row.proposed_measured > row.proposed_formula) {
      std::cerr << "check failed at p=" << row.p << " (" << cauchymds::to_string(row.mode) << ")\n";
      ok = false;
    }
  }
  return ok ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cauchy MDS array codes over the binary cyclic ring"};
  app.require_subcommand(1);

  int p = 0, k = 0, r = 0;
  std::string out_dir, input;
  auto* enc = app.add_subcommand("encode", "split FILE into k+r shards");
  enc->add_option("--p", p, "prime modulus")->required();
  enc->add_option("--k", k, "information columns")->required();
  enc->add_option("--r", r, "parity columns")->required();
  enc->add_option("--out", out_dir, "output directory")->required();
  enc->add_option("FILE", input, "input file")->required();

  std::string output;
  std::vector<std::string> shards;
  auto* dec = app.add_subcommand("decode", "rebuild a file from at least k shards");
  dec->add_option("--out", output, "output file")->required();
  dec->add_option("SHARD", shards, "shard files")->required();

  int mp = 0, mk = 0, mr = 0;
  auto* mds = app.add_subcommand("mds-check", "verify the MDS property of C(K,R,P)");
  mds->add_option("P", mp)->required();
  mds->add_option("K", mk)->required();
  mds->add_option("R", mr)->required();

  int cr = 0, p_max = 0;
  std::string csv;
  auto* cx = app.add_subcommand("complexity", "normalized XOR complexity of C(p-r,r,p)");
  cx->add_option("--r", cr, "parity columns")->required();
  cx->add_option("--p-max", p_max, "largest prime to include")->required();
  cx->add_option("--csv", csv, "output CSV path, or - for stdout")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*enc) return cmd_encode(p, k, r, out_dir, input);
    if (*dec) return cmd_decode(output, shards);
    if (*mds) return cmd_mds_check(mp, mk, mr);
    if (*cx) return cmd_complexity(cr, p_max, csv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const cauchymds::shard::DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  }
  return kUsage;
}
