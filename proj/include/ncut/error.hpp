#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ncut {

// Domain errors carry enough context to name the offending node/cluster
// in CLI diagnostics.

struct InvalidIndex : std::runtime_error {
    InvalidIndex(std::int64_t index, std::int64_t n)
        : std::runtime_error("index " + std::to_string(index) +
                             " out of range [0, " + std::to_string(n) + ")") {}
};

struct IsolatedNode : std::runtime_error {
    std::int64_t node;
    explicit IsolatedNode(std::int64_t node)
        : std::runtime_error("node " + std::to_string(node) +
                             " has degree 0 (isolated nodes are not allowed)"),
          node(node) {}
};

struct ParseError : std::runtime_error {
    std::int64_t line;
    ParseError(std::int64_t line, const std::string& what)
        : std::runtime_error("parse error at line " + std::to_string(line) +
                             ": " + what),
          line(line) {}
};

struct AsymmetricInput : std::runtime_error {
    AsymmetricInput(std::int64_t i, std::int64_t j)
        : std::runtime_error("entry (" + std::to_string(i) + ", " +
                             std::to_string(j) +
                             ") has no matching mirrored entry") {}
};

struct KTooLarge : std::runtime_error {
    KTooLarge(std::int64_t k, std::int64_t n)
        : std::runtime_error("k = " + std::to_string(k) +
                             " exceeds n - 1 = " + std::to_string(n - 1)) {}
};

struct ZeroSigma : std::runtime_error {
    std::int64_t node;
    explicit ZeroSigma(std::int64_t node)
        : std::runtime_error("node " + std::to_string(node) +
                             " has zero self-tuning bandwidth "
                             "(duplicate points); deduplicate the input"),
          node(node) {}
};

struct EmptyCluster : std::runtime_error {
    std::int64_t cluster;
    explicit EmptyCluster(std::int64_t cluster)
        : std::runtime_error("cluster " + std::to_string(cluster) +
                             " is empty"),
          cluster(cluster) {}
};

struct AllZeroRow : std::runtime_error {
    std::int64_t node;
    explicit AllZeroRow(std::int64_t node)
        : std::runtime_error("node " + std::to_string(node) +
                             " has an all-zero similarity row"),
          node(node) {}
};

struct TargetTooLarge : std::runtime_error {
    TargetTooLarge(std::int64_t c, std::int64_t limit)
        : std::runtime_error("requested cluster count " + std::to_string(c) +
                             " exceeds the first hierarchy partition size " +
                             std::to_string(limit)) {}
};

struct TooFewCandidates : std::runtime_error {
    explicit TooFewCandidates(std::int64_t count)
        : std::runtime_error("need at least 3 candidates, got " +
                             std::to_string(count)) {}
};

struct LengthMismatch : std::runtime_error {
    LengthMismatch(std::int64_t a, std::int64_t b)
        : std::runtime_error("label vectors differ in length: " +
                             std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct InstanceTooLarge : std::runtime_error {
    InstanceTooLarge()
        : std::runtime_error(
              "exhaustive enumeration guard exceeded (c^n > 1e7)") {}
};

}  // namespace ncut
