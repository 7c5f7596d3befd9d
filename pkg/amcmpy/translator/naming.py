"""Names of the tables and columns in the relational image of a model."""

ID_COLUMN = 'id'
STATE_COLUMN = 'state_id'
INDIVIDUAL_COLUMN = 'individual_id'
MEMBER_COLUMN = 'member_id'
ELEMENT_COLUMN = 'element_id'


def domain_table(domain: str) -> str:
    return domain

def state_table(domain: str) -> str:
    return f"{domain}_state"

def members_table(obj: str) -> str:
    return f"{obj}_members"

def elements_table(obj: str) -> str:
    return f"{obj}_elements"

def attribute_column(concept: str, function: str) -> str:
    return f"{concept}_{function}"

def members_key(level: int) -> str:
    """Primary key column of a level object's member table."""
    return INDIVIDUAL_COLUMN if level == 1 else MEMBER_COLUMN

def object_tables(obj) -> list:
    if obj.level == 1:
        return [members_table(obj.name)]
    return [members_table(obj.name), elements_table(obj.name)]

def table_owners(model) -> list:
    """(table name, owner description) for every table the model maps to, in emission order."""
    owners = []
    for domain in model.domains:
        owners.append((domain_table(domain), f"domain '{domain}'"))
        owners.append((state_table(domain), f"states of domain '{domain}'"))
    for obj in objects_in_order(model):
        owners.extend((table, f"object '{obj.name}'") for table in object_tables(obj))
    return owners

def column_owners(model, domain: str) -> list:
    """(column name, concept function) for the attribute columns of a domain table."""
    return [
        (attribute_column(concept.name, function), f"{concept.name}.{function}")
        for concept in model.concepts_over(domain)
        for function in concept.function_names
    ]

def objects_in_order(model) -> list:
    """Level objects by level, then declaration order."""
    order = {name: index for index, name in enumerate(model.objects)}
    return sorted(model.objects.values(), key=lambda obj: (obj.level, order[obj.name]))
