#pragma once

#include <filesystem>

#include "httplib.h"
#include "sedict/service.hpp"

namespace sedict {

// Registers the /api routes and mounts the output tree for static files.
void mount(httplib::Server& server, const ApiService& api);

}  // namespace sedict
