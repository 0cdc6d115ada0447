#pragma once

#define BURGBOUNDS_VERSION "0.1.0"
