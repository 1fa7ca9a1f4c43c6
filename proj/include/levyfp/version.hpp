#pragma once

#define LEVYFP_VERSION "0.1.0"
