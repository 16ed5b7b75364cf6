#pragma once

#include "gstruct/models.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gstruct {

enum class Status { pass, fail, skipped, c0_conflict };

std::string to_string(Status s);

struct CheckResult {
    std::string id;
    std::string group;
    Status status = Status::fail;
    std::string lhs, rhs, detail;
};

enum class Sign { positive, negative, undefined };

std::string to_string(Sign s);

struct BianchiReport {
    std::optional<Rational> alpha_modb;   // dT = 2α' P(R^A)
    std::optional<Rational> alpha_modb1;  // dT = 2α' (P(R^A) - P(R̃))
    Sign sign = Sign::undefined;
    bool proportional = true;
};

BianchiReport bianchi_calibrate(const Form& dT, const Form& P_A, const Form& P_tilde);

// r with P = r·dT, when dT is nonzero and P is a multiple of it.
std::optional<Rational> ratio_to(const Form& P, const Form& dT);

// Group names accepted by run_scenario besides exact ids and "all".
const std::vector<std::string>& check_groups();

// `selection` holds "all", group names or exact check ids; unknown entries raise UsageError.
std::vector<CheckResult> run_scenario(const ModelHandle& model, const std::vector<std::string>& selection);
std::vector<CheckResult> run_frame_scenario(const Frame& frame, const std::vector<std::string>& selection);

// Statements with no finite computational content, reported as commentary only.
std::vector<std::string> scenario_commentary(const std::string& model_name);

// Throws ParseError (with line and column) or InvalidFrame (naming the triple).
Frame parse_frame(std::string_view text);
std::string frame_to_text(const Frame& frame);

std::string render_json(const std::vector<CheckResult>& results, const std::vector<std::string>& commentary);
std::string render_text(const std::vector<CheckResult>& results, const std::vector<std::string>& commentary);

} // namespace gstruct
