#pragma once

#include <stdexcept>
#include <string>

namespace qcap {

// Base for all domain errors. what() is a single line of the form
// "<Class>: <message>" so CLI diagnostics stay machine-parsable.
class Error : public std::runtime_error {
public:
    Error(const std::string& cls, const std::string& msg)
        : std::runtime_error(cls + ": " + msg), class_(cls) {}

    const std::string& error_class() const { return class_; }

private:
    std::string class_;
};

#define QCAP_DEFINE_ERROR(Name)                                    \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& msg) : Error(#Name, msg) {} \
    }

QCAP_DEFINE_ERROR(AboveThreshold);
QCAP_DEFINE_ERROR(Divergent);
QCAP_DEFINE_ERROR(NoConvergence);
QCAP_DEFINE_ERROR(DistanceTooSmall);
QCAP_DEFINE_ERROR(NotNormalizable);
QCAP_DEFINE_ERROR(MissingQubitField);
QCAP_DEFINE_ERROR(EmptyHorizon);
QCAP_DEFINE_ERROR(EmptySuite);
QCAP_DEFINE_ERROR(ParseError);
QCAP_DEFINE_ERROR(ValidationError);
QCAP_DEFINE_ERROR(UsageError);

#undef QCAP_DEFINE_ERROR

} // namespace qcap
