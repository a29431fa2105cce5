// Regenerates the frozen rational Jack expansions. Run from the repo root:
//   ./build/tests/golden_writer tests/golden/jack_expansions.txt
#include <fstream>
#include <iostream>

#include "golden_io.hpp"

using namespace itw;

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: golden_writer <output path>\n";
        return 1;
    }
    std::vector<golden::GoldenRecord> records;
    const std::vector<Rational> thetas{Rational(1, 2), Rational(1), Rational(2), Rational(3, 4)};
    for (const auto& theta : thetas) {
        for (int w = 0; w <= 4; ++w)
            for (const auto& lambda : partitions_of_weight(w, 4))
                records.push_back(golden::make_record(lambda, 4, theta));
        records.push_back(golden::make_record(Partition{3, 2, 1}, 4, theta));
        records.push_back(golden::make_record(Partition{2, 2, 1, 1}, 4, theta));
        records.push_back(golden::make_record(Partition{4, 2}, 4, theta));
    }
    std::ofstream out(argv[1]);
    if (!out) {
        std::cerr << "cannot open " << argv[1] << "\n";
        return 1;
    }
    golden::write_records(out, records);
    return 0;
}
