#pragma once

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "samara/aero_coefficients.hpp"
#include "samara/cli/commands.hpp"
#include "samara/parameters.hpp"

namespace test {

inline std::filesystem::path fixture_dir() { return SAMARA_FIXTURE_DIR; }

// Scratch directory removed on scope exit.
class TempDir {
public:
    TempDir() {
        static std::atomic<int> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("samara-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    std::string file(const std::string& name) const { return (path_ / name).string(); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

inline CliRun run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = samara::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Value of `key` in a "key value" report.
inline double report_value(const std::string& report, const std::string& key) {
    std::istringstream in(report);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string k;
        double v = 0.0;
        if (row >> k && k == key && row >> v) return v;
    }
    throw std::runtime_error("no '" + key + "' in report");
}

inline oracle::Flat flat(const samara::AeroCoefficients& c) { return {c.c_l1, c.c_d0, c.c_d1, c.rho}; }

inline oracle::Prop prop(const samara::PropulsionUnit& u) {
    const auto& p = u.propeller;
    return {p.radius, static_cast<double>(p.blade_count), p.a0, p.a1, p.a2, p.kappa, u.motor.resistance,
            u.motor.back_emf_k};
}

}  // namespace test
