from common.lib.exceptions import CommandParametersException


class UserInput:
    """
    Class for handling user input

    Command options are declared as a name -> settings dictionary using the
    types below. The command line front end turns each declaration into a
    flag, and the raw values it collects are parsed here, so every command
    receives a dictionary with only declared keys and values of the expected
    type.
    """
    OPTION_TOGGLE = "toggle"  # boolean flag
    OPTION_CHOICE = "choice"  # one choice out of a list
    OPTION_TEXT = "string"  # simple string or integer
    OPTION_INFO = "info"  # just a bit of text, not actual input

    @staticmethod
    def parse_all(options, input, silently_correct=True):
        """
        Parse command input for the provided options

        Ignores all input not belonging to any of the defined options: parses
        and sanitises the rest, and returns a dictionary with the sanitised
        options. If an option is *not* present in the input, the default value
        is used, and if that is absent, `None`.

        :param dict options:  Options, as a name -> settings dictionary
        :param dict input:  Input, as an option -> value dictionary; values
        of `None` count as absent
        :param bool silently_correct:  If true, replace invalid values with the
        given default value; else, raise a CommandParametersException if a
        value is invalid.

        :return dict:  Sanitised input
        """
        parsed_input = {}

        # argparse uses underscores where the options use dashes
        input = {field.replace("_", "-"): value for field, value in input.items() if value is not None}

        for option, settings in options.items():
            if settings.get("type") == UserInput.OPTION_INFO:
                # structural element, never has a value
                continue

            elif settings.get("type") == UserInput.OPTION_TOGGLE:
                # absent toggles are off
                parsed_input[option] = bool(input.get(option, settings.get("default", False)))

            elif option not in input:
                # not provided? use default
                parsed_input[option] = settings.get("default", None)

            else:
                # normal parsing and sanitisation
                parsed_input[option] = UserInput.parse_value(settings, input[option], silently_correct, option)

        return parsed_input

    @staticmethod
    def parse_value(settings, choice, silently_correct=True, option="value"):
        """
        Filter user input

        Makes sure user input for commands is valid and within the parameters
        specified by the command

        :param obj settings:  Settings, including defaults and valid options
        :param choice:  The chosen option, to be parsed
        :param bool silently_correct:  If true, replace invalid values with the
        given default value; else, raise a CommandParametersException if a
        value is invalid.
        :param str option:  Name of the option, used in error messages

        :return:  Validated and parsed input
        """
        input_type = settings.get("type", "")
        if input_type == UserInput.OPTION_INFO:
            return None

        elif input_type == UserInput.OPTION_TOGGLE:
            return bool(choice)

        elif input_type == UserInput.OPTION_CHOICE:
            # one out of multiple options
            # return option if valid, or default
            if choice not in settings.get("options", {}):
                if not silently_correct:
                    raise CommandParametersException("Invalid value for --%s; must be one of %s." % (
                        option, ", ".join(settings.get("options", {}).keys())), "--" + option)
                else:
                    return settings.get("default", "")
            else:
                return choice

        elif input_type == UserInput.OPTION_TEXT:
            # text string
            # optionally coerced to a number and clamped to a range (the type
            # is inferred from the default or made explicit via coerce_type)
            if not settings.get("coerce_type") and type(settings.get("default")) not in (int, float):
                return choice if choice not in (None, "") else settings.get("default", "")

            value_type = settings.get("coerce_type") or type(settings.get("default"))
            try:
                value = value_type(choice)
            except (ValueError, TypeError):
                if not silently_correct:
                    raise CommandParametersException("Provide a number for --%s." % option, "--" + option)

                return settings.get("default")

            if "max" in settings and value > settings["max"]:
                if not silently_correct:
                    raise CommandParametersException("Provide a value of %s or lower for --%s." % (str(settings["max"]), option), "--" + option)

                value = settings["max"]

            if "min" in settings and value < settings["min"]:
                if not silently_correct:
                    raise CommandParametersException("Provide a value of %s or more for --%s." % (str(settings["min"]), option), "--" + option)

                value = settings["min"]

            return value

        else:
            # no filtering
            return choice
