#include "kzeta/dataset.hpp"
