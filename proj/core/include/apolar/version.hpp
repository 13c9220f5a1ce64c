#pragma once

#define APOLAR_VERSION "1.0.0"
#define APOLAR_VERSION_MAJOR 1
#define APOLAR_VERSION_MINOR 0
#define APOLAR_VERSION_PATCH 0
