#include "dcdkit/rational.hpp"

#include "dcdkit/error.hpp"

namespace dcdkit {

Rat parse_rat(const std::string& text) {
    Rat r;
    if (text.empty() || r.set_str(text, 10) != 0 || sgn(r.get_den()) == 0) {
        throw Error(ErrorKind::ParseError, "not a rational: '" + text + "'");
    }
    r.canonicalize();
    return r;
}

}  // namespace dcdkit
