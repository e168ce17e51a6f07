#pragma once

// JSON documents for certificates and stuck reports.

#include <string>

#include "cremona/rewrite.hpp"

namespace cremona {

/// {"field", "initial", "steps": [{position, move, params, before, after,
/// substeps?}], "final", "progress"}. Letters are "sigma" or {"lin": M}
/// with matrix entries as strings. Indented by two spaces.
std::string certificate_to_json(const RewriteCertificate& c);
/// Throws ParseError on malformed documents.
RewriteCertificate certificate_from_json(const std::string& text);

std::string stuck_to_json(const Stuck& s);

}  // namespace cremona
