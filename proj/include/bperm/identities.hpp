// include/bperm/identities.hpp - registry of identity checkers. Each checker
// compares two independently computed sides coefficient by coefficient at
// bounded parameters and reports the first discrepancy.

#pragma once

#include <bperm/error.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bperm {

enum class Param { n_max, u_order, t_order, q_order, s_max };

std::string_view param_name(Param p) noexcept;

/// Overrides for the registry defaults. Orders are exclusive: u_order = 5
/// compares modulo u^5.
struct VerifyParams {
    std::optional<int> n_max;
    std::optional<int> u_order;
    std::optional<int> t_order;
    std::optional<int> q_order;
    std::optional<int> s_max;
};

struct Witness {
    std::string location; // e.g. "n=3" or "s=2, u^1"
    std::string monomial; // canonical monomial text
    std::string expected;
    std::string actual;

    friend bool operator==(const Witness &, const Witness &) = default;
};

struct VerifyReport {
    std::string identity;
    std::vector<std::pair<Param, int>> params; // only those the checker reads
    bool pass = false;
    std::optional<Witness> witness;            // present iff !pass
    double elapsed_ms = 0;
};

struct IdentityInfo {
    std::string_view id;
    std::string_view summary;
    std::vector<std::pair<Param, int>> defaults;
};

/// Registry order is the order of the tag list.
std::span<const IdentityInfo> identity_registry();
const IdentityInfo &identity_info(std::string_view id); // Error{unknown_identity}
std::vector<std::string> identity_ids();

/// Runs one checker. Throws Error{unknown_identity}, Error{cap_exceeded}, or
/// Error{out_of_range} for a negative parameter.
VerifyReport verify(std::string_view id, const VerifyParams &params = {});

/// Runs every registered identity, concurrently, in registry order.
std::vector<VerifyReport> verify_all(const VerifyParams &params = {});

/// One-line JSON object.
std::string to_json(const VerifyReport &report);

} // namespace bperm
