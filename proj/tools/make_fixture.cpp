// Writes the bundled synthetic citation environment: three 9-journal blocks with dense
// within-block citation, sparse cross-block citation, and one focal journal linked to all blocks.
//
//   citeco_make_fixture <output-dir>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

namespace {

constexpr std::uint32_t kSeed = 20040101;
constexpr int kBlocks = 3;
constexpr int kBlockSize = 9;
const char* const kFocal = "FOCAL";

struct Draw {
  std::mt19937 rng{kSeed};
  // mt19937's output sequence is fixed by the standard; distributions are not, so map by hand.
  int between(int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint32_t>(hi - lo + 1)); }
  bool chance(double p) { return static_cast<double>(rng()) / 4294967296.0 < p; }
};

std::string journal_id(int block, int index) {
  return std::string(1, static_cast<char>('A' + block)) + (index + 1 < 10 ? "0" : "") + std::to_string(index + 1);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: citeco_make_fixture <output-dir>\n";
    return 1;
  }
  const std::string dir = argv[1];
  Draw draw;
  std::vector<std::string> ids;
  for (int b = 0; b < kBlocks; ++b) {
    for (int i = 0; i < kBlockSize; ++i) ids.push_back(journal_id(b, i));
  }
  auto block_of = [](std::size_t index) { return static_cast<int>(index) / kBlockSize; };
  // Journal size: citation volume varies by more than an order of magnitude across journals.
  std::vector<int> size;
  for (std::size_t i = 0; i < ids.size(); ++i) size.push_back(1 << draw.between(0, 4));

  std::ofstream citations(dir + "/citations.csv");
  citations << "citing,cited,count\n";
  citations << kFocal << ',' << kFocal << ',' << draw.between(20, 40) << '\n';
  for (std::size_t j = 0; j < ids.size(); ++j) citations << kFocal << ',' << ids[j] << ',' << draw.between(2, 9) << '\n';
  for (std::size_t i = 0; i < ids.size(); ++i) {
    // The last journal of each block cites the focal journal only once.
    const bool single = static_cast<int>(i) % kBlockSize == kBlockSize - 1;
    citations << ids[i] << ',' << kFocal << ',' << (single ? 1 : draw.between(2, 8)) << '\n';
    for (std::size_t j = 0; j < ids.size(); ++j) {
      int count = 0;
      if (i == j) {
        count = draw.between(20, 60);
      } else if (block_of(i) == block_of(j)) {
        count = draw.chance(0.9) ? size[i] * draw.between(2, 8) : 0;
      } else {
        count = draw.chance(0.06) ? draw.between(1, 3) : 0;
      }
      if (count > 0) citations << ids[i] << ',' << ids[j] << ',' << count << '\n';
    }
  }

  const char* const block_names[kBlocks] = {"Cognition", "Neuroscience", "Computing"};
  std::ofstream journals(dir + "/journals.csv");
  journals << "id,name,impact_factor\n";
  journals << kFocal << ",The Focal Journal,2.5\n";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const double impact = draw.between(5, 40) / 10.0;
    journals << ids[i] << ',' << block_names[block_of(i)] << " Letters " << (i % kBlockSize + 1) << ','
             << impact << '\n';
  }
  return 0;
}
