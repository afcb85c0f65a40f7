#pragma once

#include <string>

namespace authlab {

// Porter suffix-stripping stemmer (the 1980 algorithm with the author's
// later bli/logi departures). Expects a lowercase word; anything containing
// a character outside [a-z] is returned unchanged, which doubles as the
// identity behavior for non-English tokens.
std::string porter_stem(const std::string& word);

}  // namespace authlab
