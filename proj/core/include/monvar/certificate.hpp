#pragma once

// Text form of derivation certificates:
//
//   certificate
//   start <word>
//   end <word>
//   step 1 identity=<index> direction=forward|backward prefix=<word> subst=<bindings> suffix=<word>
//   ...
//
// <bindings> is "x->w,y->w" (or "-" for the identity substitution). Identity
// indices refer to the system the certificate was produced against; the
// document is enough to replay the chain with verify_certificate.

#include <string>
#include <string_view>

#include "monvar/rewrite.hpp"

namespace monvar {

std::string serialize_certificate(const DerivationCertificate& cert);
/// Throws ParseError on malformed input.
DerivationCertificate parse_certificate(std::string_view text);

/// Human-oriented rendering: one line per intermediate word with the axiom used.
std::string describe_certificate(const DerivationCertificate& cert,
                                 const Presentation& sigma);

}  // namespace monvar
