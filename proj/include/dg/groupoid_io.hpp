#ifndef DG_GROUPOID_IO_HPP
#define DG_GROUPOID_IO_HPP

#include "dg/groupoid.hpp"

#include <iosfwd>

namespace dg {

/// Plain-text model format, one declaration per line:
///   object <name>
///   mor <name> <dom-object> <cod-object>
///   compose <f> <g> <fg>
///   H <name> [<name> ...]
///   j <f> <jf>
/// Lines starting with # and blank lines are ignored. The composition table
/// must be complete; identities and inverses are derived.
DeltaModel parse_groupoid(std::istream& in);
DeltaModel parse_groupoid_text(const std::string& text);

std::string print_groupoid(const DeltaModel& m);

} // namespace dg

#endif
