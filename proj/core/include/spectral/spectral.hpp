#pragma once

#include "spectral/cluster.hpp"
#include "spectral/directions.hpp"
#include "spectral/eig_derivative.hpp"
#include "spectral/error.hpp"
#include "spectral/family.hpp"
#include "spectral/fd_oracle.hpp"
#include "spectral/hermitian_eig.hpp"
#include "spectral/ikramov.hpp"
#include "spectral/json_io.hpp"
#include "spectral/matrix.hpp"
#include "spectral/sv_derivative.hpp"
