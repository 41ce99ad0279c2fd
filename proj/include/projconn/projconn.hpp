#pragma once

#include "projconn/codes.hpp"
#include "projconn/error.hpp"
#include "projconn/field.hpp"
#include "projconn/grassmann.hpp"
#include "projconn/matspace.hpp"
#include "projconn/oracle.hpp"
#include "projconn/pathfinder.hpp"
#include "projconn/projective.hpp"
