#include "kzeta/spectral.hpp"
