#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace curvatura {

// Base class for every recoverable geometric error.  Each error carries a
// stable machine-readable code; the CLI maps these codes verbatim into JSON
// error responses.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct DegenerateAngle : Error {
    explicit DegenerateAngle(const std::string& what) : Error("degenerate-angle", what) {}
};

struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error("pole-error", what) {}
};

struct OffLine : Error {
    explicit OffLine(const std::string& what) : Error("off-line", what) {}
};

struct AntipodalError : Error {
    explicit AntipodalError(const std::string& what) : Error("antipodal", what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error("domain-error", what) {}
};

struct NotATriangle : Error {
    explicit NotATriangle(const std::string& what) : Error("not-a-triangle", what) {}
};

struct UnrealizableAngles : Error {
    explicit UnrealizableAngles(const std::string& what) : Error("unrealizable-angles", what) {}
};

// Euclidean angles do not determine an area; asking for one is an error by
// design rather than a silent zero.
struct NotDeterminedByAngles : Error {
    explicit NotDeterminedByAngles(const std::string& what) : Error("area-not-determined", what) {}
};

struct NoCanonicalUnit : Error {
    explicit NoCanonicalUnit(const std::string& what) : Error("no-canonical-unit", what) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& what) : Error("out-of-range", what) {}
};

struct NoCircumcenter : Error {
    explicit NoCircumcenter(const std::string& what) : Error("no-circumcenter", what) {}
};

struct NotApplicable : Error {
    explicit NotApplicable(const std::string& what) : Error("not-applicable", what) {}
};

struct DegenerateChain : Error {
    explicit DegenerateChain(const std::string& what) : Error("degenerate-chain", what) {}
};

struct BranchError : Error {
    explicit BranchError(const std::string& what) : Error("branch-error", what) {}
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& what) : Error("schema-error", what) {}
};

struct UnknownSuite : Error {
    explicit UnknownSuite(const std::string& what) : Error("unknown-suite", what) {}
};

struct RenderDomain : Error {
    explicit RenderDomain(const std::string& what) : Error("render-domain", what) {}
};

}  // namespace curvatura
