#pragma once
/**
 * @file test_util.hpp
 * @brief Shared helpers for the unit suite: error-code capture, random
 *        instance generation, temp files, and subprocess capture.
 */

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <sys/wait.h>
#include <utility>
#include <vector>

#include "alcs/error.hpp"
#include "alcs/strings_core.hpp"

namespace testutil {

/// Runs fn and returns the library error code it threw, if any.
template <typename Fn>
std::optional<alcs::errc> thrown_code(Fn&& fn) {
    try {
        fn();
    } catch (const alcs::error& e) {
        return e.code();
    } catch (...) {
        return std::nullopt;
    }
    return std::nullopt;
}

inline alcs::StringSet make_set(std::vector<std::string> strings) {
    alcs::Alphabet sigma = alcs::Alphabet::from_used_letters(strings);
    return alcs::validate_string_set(std::move(strings), sigma);
}

inline alcs::StringSet make_set(std::vector<std::string> strings,
                                std::string_view symbols) {
    return alcs::validate_string_set(std::move(strings),
                                     alcs::Alphabet(symbols));
}

inline std::string random_string(std::mt19937_64& rng, int len, int sigma) {
    std::uniform_int_distribution<int> pick(0, sigma - 1);
    std::string s(static_cast<size_t>(len), 'a');
    for (auto& c : s) c = static_cast<char>('a' + pick(rng));
    return s;
}

inline std::string random_string_over(std::mt19937_64& rng, int len,
                                      std::string_view symbols) {
    std::uniform_int_distribution<size_t> pick(0, symbols.size() - 1);
    std::string s(static_cast<size_t>(len), symbols[0]);
    for (auto& c : s) c = symbols[pick(rng)];
    return s;
}

inline alcs::StringSet random_set(std::mt19937_64& rng, int m, int min_len,
                                  int max_len, int sigma) {
    std::uniform_int_distribution<int> len(min_len, max_len);
    std::vector<std::string> raw;
    raw.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        raw.push_back(random_string(rng, len(rng), sigma));
    return make_set(std::move(raw));
}

/// Mismatch count between equal-length strings (plain loop on purpose).
inline long long mismatches(std::string_view a, std::string_view b) {
    long long d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

#ifdef ALCS_TMP_DIR
inline std::filesystem::path tmp_file(const std::string& name) {
    return std::filesystem::path(ALCS_TMP_DIR) / name;
}

inline std::string write_tmp(const std::string& name,
                             const std::string& content) {
    const auto path = tmp_file(name);
    std::ofstream out(path);
    out << content;
    return path.string();
}
#endif

struct CmdResult {
    int exit_code = -1;
    std::string output; ///< stdout and stderr, interleaved
};

/// Runs a shell command and captures its combined output and exit code.
inline CmdResult run_cmd(const std::string& cmd) {
    CmdResult r;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) {
        r.output = "popen failed";
        return r;
    }
    char buf[4096];
    while (fgets(buf, sizeof buf, pipe)) r.output += buf;
    const int status = pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

} // namespace testutil
