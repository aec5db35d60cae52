#pragma once

#define QAOA_VERSION_STRING "0.1.0"
