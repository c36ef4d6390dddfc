"""
Load commands dynamically
"""
from pathlib import Path
import importlib
import inspect
import config
import sys
import re


class ModuleCollector:
    """
    Collects all commands of the workbench

    On init, an object of this class collects all commands found in the
    "commands" folder in root (recursively). The classes are then stored for
    later access, indexed by their type, which doubles as the name of the
    subcommand.
    """
    ignore = []
    missing_modules = {}

    commands = {}

    def __init__(self, paths=None):
        """
        Load commands

        :param list paths:  Folders to scan; defaults to the "commands" folder
        """
        self.ignore = []
        self.missing_modules = {}
        self.commands = {}

        self.load_modules(paths)

    @staticmethod
    def is_command_class(object):
        """
        Determine if a module member is a command class we can use
        """
        # imported here, since the backend package itself loads this module
        from backend.abstract.command import BasicCommand

        return inspect.isclass(object) and \
               issubclass(object, BasicCommand) and \
               object is not BasicCommand and \
               not inspect.isabstract(object)

    def load_modules(self, paths=None):
        """
        Load modules

        Commands are found by importing any python files found in the given
        locations, and looking for classes within those python files that
        extend `BasicCommand` and are not abstract.
        """
        paths = paths or [Path(config.PATH_ROOT, "commands")]

        root_match = re.compile(r"^%s" % re.escape(config.PATH_ROOT))
        root_path = Path(config.PATH_ROOT)

        for folder in paths:
            # loop through folders, and files in those folders, recursively
            for file in sorted(Path(folder).rglob("*.py")):
                # determine module name for file
                # reduce path to be relative to the root
                module_name = ".".join(file.parts[len(root_path.parts):-1] + (file.stem,))

                if module_name in self.ignore:
                    continue

                # try importing
                try:
                    module = importlib.import_module(module_name)
                except ImportError as e:
                    # this is fine, just ignore this command and give a heads up
                    self.ignore.append(module_name)
                    if e.name not in self.missing_modules:
                        self.missing_modules[e.name] = [module_name]
                    else:
                        self.missing_modules[e.name].append(module_name)
                    continue

                # see if module contains the right type of content by looping
                # through all of its members
                components = inspect.getmembers(module, predicate=self.is_command_class)
                for component in components:
                    if component[1].type in self.commands:
                        # already indexed
                        continue

                    self.commands[component[1].type] = component[1]
                    self.commands[component[1].type].filepath = root_match.sub("", str(file))

        # sort by category for more convenient display in the help output
        self.commands = {type: self.commands[type] for type in
                         sorted(self.commands, key=lambda type: (self.commands[type].category, type))}

        # Give a heads-up if not all modules were installed properly
        if self.missing_modules:
            print_msg = "Warning: Not all modules could be found, which might cause commands to not function.\nMissing modules:\n"
            for missing_module, command_list in self.missing_modules.items():
                print_msg += "\t%s (for commands %s)\n" % (missing_module, ", ".join(command_list))

            print(print_msg, file=sys.stderr)

    def load_command_class(self, type):
        """
        Get class for a subcommand

        :param str type:  Subcommand name
        :return:  Command class
        """
        if type not in self.commands:
            raise KeyError("Unknown command %s" % type)

        return self.commands[type]
