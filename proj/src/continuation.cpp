#include "kzeta/continuation.hpp"
