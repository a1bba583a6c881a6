// Copyright 2026 The dosearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dosearch/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dosearch/error.h"
#include "json.hpp"

namespace dosearch {

using nlohmann::json;

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

std::string complex_pair(const Complex &z) {
    return "[" + format_real(z.real()) + ", " + format_real(z.imag()) + "]";
}

Complex parse_complex(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError("expected a [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json parse_json(std::istream &in, const char *what) {
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed ") + what + " document: " + e.what());
    }
}

}  // namespace

void write_instance(std::ostream &out, const ProblemInstance &instance) {
    out << "{\n  \"m_levels\": " << instance.m_levels()
        << ",\n  \"n_states\": " << instance.n_states() << ",\n  \"costs\": [";
    const auto costs = instance.costs();
    for (std::size_t j = 0; j < costs.size(); ++j) {
        out << (j == 0 ? "\n    " : ",\n    ") << format_real(costs[j]);
    }
    out << "\n  ]\n}\n";
}

ProblemInstance read_instance(std::istream &in) {
    const json doc = parse_json(in, "instance");
    if (!doc.is_object() || !doc.contains("m_levels") || !doc.contains("n_states") ||
        !doc.contains("costs") || !doc["costs"].is_array() ||
        !doc["m_levels"].is_number_integer() || !doc["n_states"].is_number_integer()) {
        throw ParseError("instance document needs integer m_levels, n_states and a costs array");
    }
    std::vector<double> costs;
    costs.reserve(doc["costs"].size());
    for (const auto &c : doc["costs"]) {
        if (!c.is_number()) throw ParseError("costs must be numbers");
        costs.push_back(c.get<double>());
    }
    const auto n = doc["n_states"].get<std::int64_t>();
    if (n < 0 || static_cast<std::size_t>(n) != costs.size()) {
        throw ParseError("n_states does not match the number of costs");
    }
    try {
        ProblemInstance instance(std::move(costs), TiePolicy::kReject);
        if (instance.m_levels() != doc["m_levels"].get<int>()) {
            throw ParseError("m_levels does not match n_states");
        }
        return instance;
    } catch (const SizeError &e) {
        throw ParseError(e.what());
    } catch (const ValidationError &e) {
        throw ParseError(e.what());
    }
}

void write_cdos(std::ostream &out, const ProblemInstance &instance,
                const PartitionSchedule &schedule) {
    const CumulativeDensity nu(instance);
    const std::size_t n = instance.n_states();
    out << "cost,empirical_nu,ideal_nu,label\n";
    for (double c : nu.sorted_costs()) {
        const std::string row = format_real(c) + "," + std::to_string(nu(c)) + "," +
                                format_real(ideal_cdos(c, n));
        out << row << ",data\n";
        for (std::size_t i = 0; i < schedule.thresholds.size(); ++i) {
            if (schedule.thresholds[i] == c) {
                out << row << ",c" << (i + 1) << "\n";
            }
        }
    }
}

void write_trace(std::ostream &out, const std::vector<StateVector> &trajectory) {
    out << "step,index,re,im,abs\n";
    for (std::size_t step = 0; step < trajectory.size(); ++step) {
        const auto amps = trajectory[step].amplitudes();
        for (std::size_t j = 0; j < amps.size(); ++j) {
            out << step << "," << j << "," << format_real(amps[j].real()) << ","
                << format_real(amps[j].imag()) << "," << format_real(std::abs(amps[j]))
                << "\n";
        }
    }
}

void write_result(std::ostream &out, const SearchResult &result) {
    out << "{\n  \"winner_index\": " << result.winner_index
        << ",\n  \"success_probability\": " << format_real(result.success_probability)
        << ",\n  \"steps\": [";
    for (std::size_t i = 0; i < result.reports.size(); ++i) {
        const auto &r = result.reports[i];
        out << (i == 0 ? "\n    " : ",\n    ") << "{\"step\": " << r.step_index
            << ", \"support_size\": " << r.support_size
            << ", \"mass_on_good\": " << format_real(r.mass_on_good)
            << ", \"max_amp_index\": " << r.max_amp_index << "}";
    }
    out << "\n  ]\n}\n";
}

void write_summary(std::ostream &out, const RobustnessSummary &summary) {
    out << "trial,offset_vector,success_probability\n";
    for (const auto &t : summary.trials) {
        out << t.trial << ",";
        for (std::size_t i = 0; i < t.offsets.size(); ++i) {
            out << (i == 0 ? "" : ";") << t.offsets[i];
        }
        out << "," << format_real(t.success_probability) << "\n";
    }
    out << "mean,," << format_real(summary.mean) << "\n";
    out << "min,," << format_real(summary.min) << "\n";
    out << "fraction_ge_0.99,," << format_real(summary.fraction_high) << "\n";
    out << "redraws,," << summary.total_redraws << "\n";
}

void write_factorization(std::ostream &out, const Factorization &factorization) {
    out << "{\n  \"dim\": " << factorization.dim() << ",\n  \"factors\": [";
    for (std::size_t k = 0; k < factorization.factors.size(); ++k) {
        const auto &f = factorization.factors[k];
        out << (k == 0 ? "\n    " : ",\n    ") << "{\"p\": " << f.p << ", \"q\": " << f.q
            << ", \"block\": [" << complex_pair(f.block[0]) << ", "
            << complex_pair(f.block[1]) << ", " << complex_pair(f.block[2]) << ", "
            << complex_pair(f.block[3]) << "]}";
    }
    out << "\n  ],\n  \"diagonal\": [";
    for (std::size_t j = 0; j < factorization.diagonal.size(); ++j) {
        out << (j == 0 ? "" : ", ") << complex_pair(factorization.diagonal[j]);
    }
    out << "]\n}\n";
}

Factorization read_factorization(std::istream &in) {
    const json doc = parse_json(in, "factorization");
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("factors") ||
        !doc.contains("diagonal") || !doc["factors"].is_array() ||
        !doc["diagonal"].is_array()) {
        throw ParseError("factorization document needs dim, factors and diagonal");
    }
    Factorization out;
    try {
    for (const auto &f : doc["factors"]) {
        if (!f.contains("p") || !f.contains("q") || !f.contains("block") ||
            !f["block"].is_array() || f["block"].size() != 4) {
            throw ParseError("factor needs p, q and a 4-entry block");
        }
        TwoLevelFactor factor;
        factor.p = f["p"].get<std::size_t>();
        factor.q = f["q"].get<std::size_t>();
        for (std::size_t k = 0; k < 4; ++k) factor.block[k] = parse_complex(f["block"][k]);
        out.factors.push_back(factor);
    }
    for (const auto &d : doc["diagonal"]) out.diagonal.push_back(parse_complex(d));
    if (doc["dim"].get<std::size_t>() != out.diagonal.size()) {
        throw ParseError("dim does not match diagonal length");
    }
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed factorization document: ") + e.what());
    }
    return out;
}

ProblemInstance load_instance(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "' for reading");
    }
    return read_instance(in);
}

void save_text(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot open '" + path + "' for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw Error("write to '" + path + "' failed");
    }
}

}  // namespace dosearch
