#pragma once

// Monochromatic targets: connected k-matchings (CM_k) and even cycles C_{2k}.

#include <stdexcept>
#include <string>

namespace biparrow {

enum class TargetKind { connected_matching, even_cycle };

class Target {
  public:
    // CM_k for k >= 0; k = 0 is accepted but flagged degenerate (every
    // coloring contains it).
    static Target connected_matching(int k) {
        if (k < 0) throw std::invalid_argument("connected matching target: negative size");
        return Target(TargetKind::connected_matching, k);
    }

    // C_len for even len >= 4.
    static Target even_cycle(int len) {
        if (len < 4 || len % 2 != 0)
            throw std::invalid_argument("even cycle target: length must be even and >= 4");
        return Target(TargetKind::even_cycle, len);
    }

    // "cm:<k>" or "cycle:<2k>".
    static Target parse(const std::string &spec);

    TargetKind kind() const { return kind_; }

    // Matching size for CM targets, cycle length for cycle targets.
    int param() const { return param_; }

    bool degenerate() const { return kind_ == TargetKind::connected_matching && param_ == 0; }

    std::string to_string() const {
        if (kind_ == TargetKind::connected_matching) return "cm:" + std::to_string(param_);
        return "cycle:" + std::to_string(param_);
    }

    friend bool operator==(const Target &a, const Target &b) {
        return a.kind_ == b.kind_ && a.param_ == b.param_;
    }

  private:
    Target(TargetKind kind, int param) : kind_(kind), param_(param) {}

    TargetKind kind_;
    int param_;
};

}  // namespace biparrow
