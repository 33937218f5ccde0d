#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pog {

// Raised when an input violates a structural requirement of the model
// (malformed tables, backend mismatches, missing certificates, ...).
struct ModelError : std::runtime_error {
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation's stated precondition does not hold.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// Three-valued outcome of every decision procedure.  Holds carries a
// certificate, Fails a counterexample, and UnknownUpToBound the search
// bound that was exhausted without a definite answer.
class Verdict {
  public:
    enum class Kind { Holds, Fails, Unknown };

    static Verdict holds(std::string certificate = "") {
        Verdict v;
        v.kind_ = Kind::Holds;
        v.detail_ = std::move(certificate);
        return v;
    }
    static Verdict fails(std::string witness) {
        Verdict v;
        v.kind_ = Kind::Fails;
        v.detail_ = std::move(witness);
        return v;
    }
    static Verdict unknown(long bound, std::string note = "") {
        Verdict v;
        v.kind_ = Kind::Unknown;
        v.bound_ = bound;
        v.detail_ = std::move(note);
        return v;
    }

    Kind kind() const { return kind_; }
    bool is_holds() const { return kind_ == Kind::Holds; }
    bool is_fails() const { return kind_ == Kind::Fails; }
    bool is_unknown() const { return kind_ == Kind::Unknown; }
    bool definite() const { return kind_ != Kind::Unknown; }

    const std::string& certificate() const { return detail_; }
    const std::string& witness() const { return detail_; }
    long bound() const { return bound_; }

    std::string str() const {
        switch (kind_) {
            case Kind::Holds:
                return detail_.empty() ? "HOLDS" : "HOLDS (certificate: " + detail_ + ")";
            case Kind::Fails:
                return "FAILS (witness: " + detail_ + ")";
            default:
                return "UNKNOWN up to bound " + std::to_string(bound_) +
                       (detail_.empty() ? "" : " (" + detail_ + ")");
        }
    }

  private:
    Kind kind_ = Kind::Holds;
    std::string detail_;
    long bound_ = 0;
};

}  // namespace pog
