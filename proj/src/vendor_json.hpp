#ifndef CSF_VENDOR_JSON_HPP
#define CSF_VENDOR_JSON_HPP

#include <json.hpp>

#endif
