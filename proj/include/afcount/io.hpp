#ifndef AFCOUNT_IO_HPP
#define AFCOUNT_IO_HPP

#include <string>

#include "afcount/af.hpp"

namespace afc {

// APX: `arg(<name>).` and `att(<a>,<b>).` lines, `%` comments. Attacks must
// reference declared arguments; parse errors carry line numbers.
Framework parse_apx(const std::string& text);

// TGF: one node name per line, a `#` separator, then `<from> <to>` lines.
Framework parse_tgf(const std::string& text);

std::string to_apx(const Framework& f);

}  // namespace afc

#endif
