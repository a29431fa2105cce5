#pragma once

// Text format for frozen Jack expansions, exact rationals:
//   record lambda=(2,1) n=3 theta=1/2
//   norm 30
//   coeff (2,1) 4
//   coeff (1,1,1) 6
//   end

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "itw/jack.hpp"

namespace itw::golden {

struct GoldenRecord {
    Partition lambda;
    int nvars = 0;
    Rational theta;
    Rational norm;
    std::vector<std::pair<Partition, Rational>> coeffs;
};

inline Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string digits;
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
        } else if (!digits.empty()) {
            parts.push_back(std::stoi(digits));
            digits.clear();
        }
    }
    if (!digits.empty()) parts.push_back(std::stoi(digits));
    return Partition(parts);
}

inline std::string partition_to_string(const Partition& p) { return p.to_string(); }

inline void write_records(std::ostream& os, const std::vector<GoldenRecord>& records) {
    os << "# frozen Jack expansions: J_lambda in the monomial basis, exact rationals\n";
    for (const auto& rec : records) {
        os << "record lambda=" << partition_to_string(rec.lambda) << " n=" << rec.nvars
           << " theta=" << rec.theta.str() << "\n";
        os << "norm " << rec.norm.str() << "\n";
        for (const auto& [mu, c] : rec.coeffs)
            os << "coeff " << partition_to_string(mu) << " " << c.str() << "\n";
        os << "end\n";
    }
}

inline std::vector<GoldenRecord> read_records(std::istream& is) {
    std::vector<GoldenRecord> records;
    std::string line;
    GoldenRecord current;
    bool in_record = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "record") {
            current = GoldenRecord{};
            in_record = true;
            std::string field;
            while (ss >> field) {
                auto eq = field.find('=');
                std::string key = field.substr(0, eq), value = field.substr(eq + 1);
                if (key == "lambda") current.lambda = parse_partition(value);
                else if (key == "n") current.nvars = std::stoi(value);
                else if (key == "theta") current.theta = Rational(value);
            }
        } else if (tag == "norm") {
            std::string value;
            ss >> value;
            current.norm = Rational(value);
        } else if (tag == "coeff") {
            std::string part, value;
            ss >> part >> value;
            current.coeffs.emplace_back(parse_partition(part), Rational(value));
        } else if (tag == "end") {
            if (in_record) records.push_back(current);
            in_record = false;
        }
    }
    return records;
}

inline GoldenRecord make_record(const Partition& lambda, int n, const Rational& theta) {
    GoldenRecord rec;
    rec.lambda = lambda;
    rec.nvars = n;
    rec.theta = theta;
    rec.norm = jack_norm_at_ones(lambda, n, theta);
    auto poly = jack_expand(lambda, n, theta);
    for (const auto& [mu, c] : poly.terms) rec.coeffs.emplace_back(mu, c);
    return rec;
}

} // namespace itw::golden
