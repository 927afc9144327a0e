"""
Miscellaneous control functions.

This module contains the lookup of the default values of all subpackages.

"""

import types


def _get_module_values(goal_dict, module):
    for var in dir(module):
        if var.startswith("_"):
            continue
        value = getattr(module, var)
        if isinstance(value, (types.ModuleType, types.FunctionType)):
            continue
        goal_dict["{0}.{1}".format(module.__name__, var)] = value
    return goal_dict


def get_defaults(search_str="", as_string=False):
    """Return a dictionary with all default values in the current Randomtrap
    environment. The keys represent the variables names.

    Parameters
    ----------
    search_str : str, optional
        search for a specific expression
    as_string : bool, optional
        print as string instead of dict

    """

    from .. import lattice, percolation, matching, game, constructions, \
        bootstrap, experiments, io, control

    defaults = {}
    for package in (lattice, percolation, matching, game, constructions,
                    bootstrap, experiments, io, control):
        defaults = _get_module_values(defaults, package.defaults)
    if len(search_str) > 0:
        tmp = {}
        for key in list(defaults.keys()):
            if key.lower().find(search_str.lower()) >= 0:
                tmp[key] = defaults[key]
        defaults = tmp
    if as_string:
        rtn = ""
        for key in sorted(defaults.keys()):
            tabs = "\t" * max(1, 6 - int((len(key) + 1) // 8))
            rtn += key + ":" + tabs + repr(defaults[key]) + "\n"
    else:
        rtn = defaults
    return rtn
