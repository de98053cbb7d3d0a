#ifndef RESURGENCE_VERSION_HPP
#define RESURGENCE_VERSION_HPP

#define RESURGENCE_VERSION "0.1.0"

#endif
