#pragma once

// Command-line surface: subcommands touchard, triangle, bell, verify.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "touchard/identities.hpp"
#include "touchard/stirling.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace touchard::cli {

enum class OutputFormat { plain, json, csv };

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

std::string render_touchard(unsigned m, unsigned n_max, OutputFormat format);
std::string render_triangle(unsigned m, unsigned n_max, OutputFormat format,
                            Form form = Form::corrected);
std::string render_bell(unsigned n_max, OutputFormat format);

struct VerifyOptions {
    std::string suite = "all";
    unsigned m_max = 4;
    unsigned n_max = 12;
    unsigned order = default_order;
    unsigned ell_max = 3;
    unsigned samples = 5;
    std::uint64_t seed = 20100917;
    Form form = Form::corrected;
};

const std::vector<std::string>& suite_names();

/// Runs the selected suite; throws std::invalid_argument for an unknown suite name.
std::vector<VerificationReport> run_suite(const VerifyOptions& options);

std::string render_reports(const std::string& suite, const std::vector<VerificationReport>& reports,
                           OutputFormat format);

/// Full CLI entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace touchard::cli
